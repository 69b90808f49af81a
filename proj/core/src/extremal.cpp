#include "edgemap/extremal.hpp"

#include <algorithm>
#include <set>

#include "edgemap/canonical.hpp"
#include "edgemap/census.hpp"
#include "edgemap/graph6.hpp"
#include "parallel.hpp"

namespace edgemap {

namespace {

bool contains_any(const Graph& host, const PatternFamily& family) {
    for (const Graph& member : family.members)
        if (contains_subgraph(host, member))
            return true;
    return false;
}

} // namespace

ExtremalResult compute_ex(int n, const PatternFamily& family, const ExtremalOptions&) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 9)
        throw budget_error("Turán number search supports n <= 9");
    // family-free graphs only: freeness is closed downward, so children
    // of family-free parents cover every level completely
    std::vector<Graph> level{Graph(0)};
    std::vector<Graph> last_nonempty = level;
    int value = 0;
    uint64_t examined = 0;
    const int cap = n * (n - 1) / 2;
    for (int m = 0; m < cap && !level.empty(); ++m) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        auto add = [&](const Graph& child) {
            ++examined;
            Graph canon = canonical_graph(child);
            std::string key = to_graph6(canon);
            if (!seen.insert(key).second)
                return;
            if (contains_any(canon, family))
                return;
            next.push_back(std::move(canon));
        };
        for (const Graph& parent : level) {
            const int p = parent.order();
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v)
                    if (!parent.has_edge(u, v))
                        add(parent.with_edge(u, v));
            if (p + 1 <= n) {
                Graph grown = parent.padded(p + 1);
                for (int u = 0; u < p; ++u)
                    add(grown.with_edge(u, p));
            }
            if (p + 2 <= n)
                add(parent.padded(p + 2).with_edge(p, p + 1));
        }
        std::sort(next.begin(), next.end(),
                  [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
        if (!next.empty()) {
            value = m + 1;
            last_nonempty = next;
        }
        level = std::move(next);
    }
    ExtremalResult r;
    r.func = "ex";
    r.n = n;
    r.family = family;
    r.value = value;
    r.witness = last_nonempty.front().padded(n);
    r.stats.nodes = examined;
    return r;
}

namespace {

// Shared descending-edge-count scan for h and s.
ExtremalResult scan_hosts(const std::string& func, int n, const PatternFamily& family, int d,
                          Mode mode, int cap, const ExtremalOptions& opts) {
    auto levels = enumerate_levels(n, cap);
    const int workers = detail::resolve_workers(opts.workers);
    uint64_t hosts_examined = 0;
    for (int m = cap; m >= 0; --m) {
        const std::vector<Graph>& level = levels[static_cast<size_t>(m)];
        // all verdicts are computed, then the smallest canonical witness
        // wins, so the outcome is worker-count independent
        std::vector<std::optional<AvoidanceVerdict>> verdicts(level.size());
        detail::parallel_for(static_cast<int>(level.size()), workers, [&](int i) {
            const Graph& host = level[static_cast<size_t>(i)];
            if (opts.unavoidable_cache) {
                for (const Graph& member : *opts.unavoidable_cache)
                    if (contains_subgraph(host, member))
                        return; // unavoidable by monotonicity
            }
            DecideOptions dopts;
            dopts.solve = opts.solve;
            AvoidanceVerdict v = (mode == Mode::Free && d == 1)
                                     ? decide_avoidance(host, family, d, mode, dopts)
                                     : exists_avoider(host, family, d, mode, opts.solve);
            if (v.kind == VerdictKind::Avoider)
                verdicts[static_cast<size_t>(i)] = std::move(v);
        });
        hosts_examined += level.size();
        for (size_t i = 0; i < level.size(); ++i) {
            if (!verdicts[i])
                continue;
            ExtremalResult r;
            r.func = func;
            r.n = n;
            r.family = family;
            r.value = m;
            r.witness = level[i].padded(n);
            // padding only appends isolated vertices, edge indices stay put
            r.mapping = EdgeMapping(*r.witness, verdicts[i]->mapping->image, d);
            r.stats.nodes = hosts_examined;
            return r;
        }
    }
    throw std::logic_error("even the empty host was rejected");
}

} // namespace

ExtremalResult compute_h(int n, const PatternFamily& family, const ExtremalOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 8)
        throw budget_error("h search supports n <= 8");
    ExtremalResult ex = compute_ex(n, family, opts);
    const int cap = std::min(n * (n - 1) / 2, 3 * ex.value);
    return scan_hosts("h", n, family, 1, Mode::Free, cap, opts);
}

ExtremalResult compute_s(int n, const PatternFamily& family, const ExtremalOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 6)
        throw budget_error("s search supports n <= 6");
    // hosts with F_{H,0} empty come back as NoLegalMapping and never win
    return scan_hosts("s", n, family, 0, Mode::Exclusive, n * (n - 1) / 2, opts);
}

namespace {

ExtremalResult bisect_kn_mapping(const std::string& func, int n, const PatternFamily& family,
                                 bool exclusive, const ExtremalOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > 5)
        throw budget_error("K_n mapping search supports n <= 5");
    auto feasible = [&](int m) {
        return exclusive ? exists_p_mapping(n, family, m, opts.solve)
                         : exists_q_mapping(n, family, 1, m, opts.solve);
    };
    const int total = n * (n - 1) / 2;
    uint64_t probes = 0;
    // m = 0 always works: fixed points kill every copy through them
    int lo = 0, hi = total + 1; // lo feasible, hi infeasible
    std::optional<QMapping> best = feasible(0);
    probes += 2;
    if (auto q = feasible(total)) {
        best = std::move(q);
        lo = total;
    } else {
        hi = total;
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        ++probes;
        if (auto q = feasible(mid)) {
            best = std::move(q);
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ExtremalResult r;
    r.func = func;
    r.n = n;
    r.family = family;
    r.value = lo;
    r.qmapping = std::move(best);
    r.stats.nodes = probes;
    return r;
}

} // namespace

ExtremalResult compute_q(int n, const PatternFamily& family, const ExtremalOptions& opts) {
    return bisect_kn_mapping("q", n, family, false, opts);
}

ExtremalResult compute_p(int n, const PatternFamily& family, const ExtremalOptions& opts) {
    return bisect_kn_mapping("p", n, family, true, opts);
}

} // namespace edgemap
