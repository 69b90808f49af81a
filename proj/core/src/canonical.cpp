#include "edgemap/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "edgemap/graph6.hpp"

namespace edgemap {

namespace {

constexpr int kMaxOrder = 16;

// Rows are packed with position j of the prefix at bit (15 - j), so
// integer comparison of rows equals lexicographic comparison of the
// bit sequence.
struct CanonSearch {
    int n = 0;
    std::array<uint32_t, kMaxOrder> adj{}; // vertex -> neighbor bitmask

    std::array<int, kMaxOrder> pos{};       // level -> chosen vertex
    std::array<uint16_t, kMaxOrder> rows{}; // current row per level

    bool best_valid = false;
    std::array<uint16_t, kMaxOrder> best_rows{};
    std::array<int, kMaxOrder> best_pos{};

    uint16_t row_bits(int v, int k) const {
        uint16_t r = 0;
        for (int j = 0; j < k; ++j)
            if (adj[static_cast<size_t>(v)] >> pos[static_cast<size_t>(j)] & 1u)
                r |= static_cast<uint16_t>(1u << (15 - j));
        return r;
    }

    bool current_beats_best() const {
        for (int j = 0; j < n; ++j) {
            if (rows[static_cast<size_t>(j)] != best_rows[static_cast<size_t>(j)])
                return rows[static_cast<size_t>(j)] < best_rows[static_cast<size_t>(j)];
        }
        return false;
    }

    // prefix_equal: rows[0..k-1] equal the best prefix as seen on entry.
    // Any best update below this node shares the node's prefix, so the
    // flag stays valid for pruning (stale values only cost extra work,
    // never correctness: leaves re-compare in full).
    void dfs(int k, uint32_t used, bool prefix_equal) {
        if (k == n) {
            if (!best_valid || current_beats_best()) {
                best_valid = true;
                best_rows = rows;
                best_pos = pos;
            }
            return;
        }
        struct Cand {
            uint16_t row;
            int v;
        };
        std::array<Cand, kMaxOrder> cands;
        int nc = 0;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1u))
                cands[static_cast<size_t>(nc++)] = Cand{row_bits(v, k), v};
        std::sort(cands.begin(), cands.begin() + nc,
                  [](const Cand& a, const Cand& b) { return a.row != b.row ? a.row < b.row : a.v < b.v; });
        for (int i = 0; i < nc; ++i) {
            const auto [row, v] = cands[static_cast<size_t>(i)];
            if (best_valid && prefix_equal && row > best_rows[static_cast<size_t>(k)])
                break;
            // Twin pruning: skip v if an earlier same-row candidate has the
            // same neighborhood outside {u, v}; transposing them is an
            // automorphism, so the subtrees produce identical strings.
            bool twin = false;
            for (int t = 0; t < i && !twin; ++t) {
                const auto [trow, u] = cands[static_cast<size_t>(t)];
                if (trow != row)
                    continue;
                uint32_t mask = ~((1u << u) | (1u << v));
                twin = ((adj[static_cast<size_t>(u)] ^ adj[static_cast<size_t>(v)]) & mask) == 0;
            }
            if (twin)
                continue;
            pos[static_cast<size_t>(k)] = v;
            rows[static_cast<size_t>(k)] = row;
            bool eq = best_valid && prefix_equal && row == best_rows[static_cast<size_t>(k)];
            dfs(k + 1, used | (1u << v), !best_valid ? true : eq);
        }
    }
};

std::vector<int> canonical_labeling_impl(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder)
        throw budget_error("canonical labeling supports order <= 16");
    CanonSearch s;
    s.n = n;
    for (const Edge& e : g.edges()) {
        s.adj[static_cast<size_t>(e.u)] |= 1u << e.v;
        s.adj[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    s.dfs(0, 0, true);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        perm[static_cast<size_t>(s.best_pos[static_cast<size_t>(k)])] = k;
    return perm;
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) { return canonical_labeling_impl(g); }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling_impl(g)); }

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0)
        return CanonicalForm{to_graph6(g)};
    return CanonicalForm{to_graph6(canonical_graph(g))};
}

CanonicalForm canonical_form_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 8)
        throw budget_error("brute-force canonical form supports order <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc = to_graph6(g.relabeled(perm));
        if (best.empty() || enc < best)
            best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty())
        best = to_graph6(g);
    return CanonicalForm{best};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    auto ds = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.order(); ++v)
            d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (ds(g) != ds(h))
        return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace edgemap
