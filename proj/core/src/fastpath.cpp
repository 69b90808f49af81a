#include "edgemap/fastpath.hpp"

#include <algorithm>
#include <queue>

#include "edgemap/named.hpp"
#include "edgemap/patterns.hpp"

namespace edgemap {

LineComplement line_complement(const Graph& host) {
    LineComplement lc;
    lc.adj.assign(static_cast<size_t>(host.size()), {});
    for (int e1 = 0; e1 < host.size(); ++e1)
        for (int e2 = e1 + 1; e2 < host.size(); ++e2)
            if (host.edges_disjoint(e1, e2)) {
                lc.adj[static_cast<size_t>(e1)].push_back(e2);
                lc.adj[static_cast<size_t>(e2)].push_back(e1);
                ++lc.edge_count;
            }
    return lc;
}

namespace {

// Orients one tree-or-unicyclic component so every vertex has exactly
// one out-arc covering each component edge: the cycle (or the doubled
// tree edge) is directed around, everything else points toward it.
void orient_component(const LineComplement& lc, const std::vector<int>& comp,
                      std::vector<int>& out) {
    if (comp.size() == 1)
        return; // no copies through an isolated edge
    std::vector<int> deg;
    deg.reserve(comp.size());
    std::vector<int> local(lc.adj.size(), -1);
    for (size_t i = 0; i < comp.size(); ++i)
        local[static_cast<size_t>(comp[i])] = static_cast<int>(i);
    long long edges = 0;
    for (int v : comp) {
        deg.push_back(static_cast<int>(lc.adj[static_cast<size_t>(v)].size()));
        edges += static_cast<long long>(lc.adj[static_cast<size_t>(v)].size());
    }
    edges /= 2;

    std::vector<int> core_roots; // the cycle, or both ends of the doubled edge
    if (edges == static_cast<long long>(comp.size())) {
        // unicyclic: peel leaves, the cycle remains
        std::vector<int> d = deg;
        std::queue<int> q;
        for (size_t i = 0; i < comp.size(); ++i)
            if (d[i] == 1)
                q.push(static_cast<int>(i));
        std::vector<bool> removed(comp.size(), false);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            removed[static_cast<size_t>(i)] = true;
            for (int w : lc.adj[static_cast<size_t>(comp[static_cast<size_t>(i)])]) {
                int j = local[static_cast<size_t>(w)];
                if (j < 0 || removed[static_cast<size_t>(j)])
                    continue;
                if (--d[static_cast<size_t>(j)] == 1)
                    q.push(j);
            }
        }
        std::vector<int> cycle;
        for (size_t i = 0; i < comp.size(); ++i)
            if (!removed[i])
                cycle.push_back(comp[i]);
        // walk the cycle starting at its smallest vertex, toward its
        // smaller cycle neighbor
        std::vector<bool> on_cycle(lc.adj.size(), false);
        for (int v : cycle)
            on_cycle[static_cast<size_t>(v)] = true;
        int start = *std::min_element(cycle.begin(), cycle.end());
        int prev = -1, cur = start;
        do {
            int next = -1;
            for (int w : lc.adj[static_cast<size_t>(cur)]) {
                if (!on_cycle[static_cast<size_t>(w)] || w == prev)
                    continue;
                if (next == -1 || w < next)
                    next = w;
            }
            out[static_cast<size_t>(cur)] = next;
            prev = cur;
            cur = next;
        } while (cur != start);
        core_roots = cycle;
    } else {
        // tree: double the lexicographically smallest edge
        int bu = -1, bv = -1;
        for (int v : comp)
            for (int w : lc.adj[static_cast<size_t>(v)])
                if (v < w && (bu == -1 || std::pair(v, w) < std::pair(bu, bv))) {
                    bu = v;
                    bv = w;
                }
        out[static_cast<size_t>(bu)] = bv;
        out[static_cast<size_t>(bv)] = bu;
        core_roots = {bu, bv};
    }

    std::queue<int> q;
    std::vector<bool> seen(lc.adj.size(), false);
    for (int v : core_roots) {
        seen[static_cast<size_t>(v)] = true;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : lc.adj[static_cast<size_t>(v)]) {
            if (seen[static_cast<size_t>(w)] || local[static_cast<size_t>(w)] < 0)
                continue;
            seen[static_cast<size_t>(w)] = true;
            out[static_cast<size_t>(w)] = v;
            q.push(w);
        }
    }
}

} // namespace

AvoidanceVerdict fast_2k2_decide(const Graph& host) {
    AvoidanceVerdict verdict;
    verdict.stats.shortcut = "line-complement";
    if (host.size() == 0) {
        verdict.kind = VerdictKind::Avoider;
        verdict.mapping = EdgeMapping(host, {}, 1);
        return verdict;
    }
    if (host.size() == 1) {
        verdict.kind = VerdictKind::NoLegalMapping;
        return verdict;
    }

    LineComplement lc = line_complement(host);
    Graph clg; // component decomposition reuses the Graph helpers
    {
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < host.size(); ++v)
            for (int w : lc.adj[static_cast<size_t>(v)])
                if (v < w)
                    es.emplace_back(v, w);
        clg = Graph::from_edges(host.size(), es);
    }

    std::vector<int> out(static_cast<size_t>(host.size()), -1);
    for (const auto& comp : connected_components(clg)) {
        long long edges = 0;
        for (int v : comp)
            edges += static_cast<long long>(lc.adj[static_cast<size_t>(v)].size());
        edges /= 2;
        if (edges > static_cast<long long>(comp.size())) {
            verdict.kind = VerdictKind::Unavoidable;
            verdict.stats.detail = "component with " + std::to_string(edges) + " copies on " +
                                   std::to_string(comp.size()) + " edges";
            return verdict;
        }
        orient_component(lc, comp, out);
    }

    for (int e = 0; e < host.size(); ++e) {
        if (out[static_cast<size_t>(e)] != -1)
            continue;
        out[static_cast<size_t>(e)] = e == 0 ? 1 : 0; // isolated in the complement
    }
    EdgeMapping f(host, std::move(out), 1);
    PatternFamily fam = PatternFamily::of(build_named({GraphKind::Matching, {2}}), "2K2");
    if (!verify_avoider(host, fam, f, Mode::Free))
        throw std::logic_error("line-complement avoider failed re-verification");
    verdict.kind = VerdictKind::Avoider;
    verdict.mapping = std::move(f);
    return verdict;
}

} // namespace edgemap
