#include "edgemap/functional.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace edgemap {

FunctionalDigraph FunctionalDigraph::from_arcs(int order,
                                               const std::vector<std::pair<int, int>>& arcs) {
    FunctionalDigraph g;
    g.order = order;
    g.out.assign(static_cast<size_t>(order), {});
    for (auto [a, b] : arcs) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw std::invalid_argument("arc endpoint out of range");
        if (a == b)
            continue;
        g.out[static_cast<size_t>(a)].push_back(b);
    }
    int d = 0;
    for (auto& lst : g.out) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        d = std::max(d, static_cast<int>(lst.size()));
    }
    g.d = std::max(d, 1);
    return g;
}

FunctionalDigraph build_gamma(const EdgeMapping& f,
                              const std::optional<std::vector<std::vector<int>>>& partition) {
    const int m = f.host.size();
    std::vector<int> part_of(static_cast<size_t>(m), -1);
    int parts = 0;
    if (partition) {
        for (const auto& p : *partition) {
            for (int e : p) {
                if (e < 0 || e >= m)
                    throw std::invalid_argument("partition edge out of range");
                if (part_of[static_cast<size_t>(e)] != -1)
                    throw std::invalid_argument("overlapping partition");
                part_of[static_cast<size_t>(e)] = parts;
            }
            ++parts;
        }
        for (int e = 0; e < m; ++e)
            if (part_of[static_cast<size_t>(e)] == -1)
                throw std::invalid_argument("partition does not cover all edges");
    } else {
        parts = m;
        for (int e = 0; e < m; ++e)
            part_of[static_cast<size_t>(e)] = e;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < m; ++e)
        arcs.emplace_back(part_of[static_cast<size_t>(e)], part_of[static_cast<size_t>(f(e))]);
    FunctionalDigraph g = FunctionalDigraph::from_arcs(parts, arcs);
    if (partition) {
        size_t largest = 0;
        for (const auto& p : *partition)
            largest = std::max(largest, p.size());
        g.d = std::max<int>(1, static_cast<int>(largest));
    }
    return g;
}

namespace {

std::vector<std::vector<int>> underlying_adj(const FunctionalDigraph& g) {
    std::vector<std::set<int>> adj(static_cast<size_t>(g.order));
    for (int v = 0; v < g.order; ++v)
        for (int w : g.out[static_cast<size_t>(v)]) {
            adj[static_cast<size_t>(v)].insert(w);
            adj[static_cast<size_t>(w)].insert(v);
        }
    std::vector<std::vector<int>> out(static_cast<size_t>(g.order));
    for (int v = 0; v < g.order; ++v)
        out[static_cast<size_t>(v)].assign(adj[static_cast<size_t>(v)].begin(),
                                           adj[static_cast<size_t>(v)].end());
    return out;
}

// Larger bipartition side of a tree, smaller vertices preferred on ties.
std::vector<int> tree_side(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp) {
    std::vector<int> color(adj.size(), -1);
    std::vector<int> side[2];
    std::queue<int> q;
    int root = *std::min_element(comp.begin(), comp.end());
    color[static_cast<size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        side[color[static_cast<size_t>(v)]].push_back(v);
        for (int w : adj[static_cast<size_t>(v)])
            if (color[static_cast<size_t>(w)] == -1) {
                color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                q.push(w);
            }
    }
    return side[1].size() > side[0].size() ? side[1] : side[0];
}

} // namespace

std::vector<int> independent_set(const FunctionalDigraph& g) {
    auto adj = underlying_adj(g);
    int max_out = 0;
    for (const auto& lst : g.out)
        max_out = std::max(max_out, static_cast<int>(lst.size()));

    std::vector<int> chosen;
    if (max_out <= 1) {
        // components are trees or unicyclic
        Graph und;
        {
            std::vector<std::pair<int, int>> es;
            for (int v = 0; v < g.order; ++v)
                for (int w : adj[static_cast<size_t>(v)])
                    if (v < w)
                        es.emplace_back(v, w);
            und = Graph::from_edges(g.order, es);
        }
        for (const auto& comp : connected_components(und)) {
            long long edges = 0;
            for (int v : comp)
                edges += static_cast<long long>(adj[static_cast<size_t>(v)].size());
            edges /= 2;
            if (edges < static_cast<long long>(comp.size())) {
                auto side = tree_side(adj, comp);
                chosen.insert(chosen.end(), side.begin(), side.end());
            } else {
                // unicyclic: drop the smallest cycle vertex, 2-color the rest
                std::vector<int> deg(adj.size(), 0);
                std::vector<bool> removed(adj.size(), true);
                for (int v : comp) {
                    deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
                    removed[static_cast<size_t>(v)] = false;
                }
                std::queue<int> q;
                for (int v : comp)
                    if (deg[static_cast<size_t>(v)] == 1)
                        q.push(v);
                while (!q.empty()) {
                    int v = q.front();
                    q.pop();
                    removed[static_cast<size_t>(v)] = true;
                    for (int w : adj[static_cast<size_t>(v)])
                        if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1)
                            q.push(w);
                }
                int drop = -1;
                for (int v : comp)
                    if (!removed[static_cast<size_t>(v)]) {
                        drop = v;
                        break;
                    }
                // forest components after dropping
                std::vector<std::vector<int>> fadj(adj.size());
                for (int v : comp) {
                    if (v == drop)
                        continue;
                    for (int w : adj[static_cast<size_t>(v)])
                        if (w != drop)
                            fadj[static_cast<size_t>(v)].push_back(w);
                }
                std::vector<bool> seen(adj.size(), false);
                seen[static_cast<size_t>(drop)] = true;
                for (int v : comp) {
                    if (seen[static_cast<size_t>(v)])
                        continue;
                    std::vector<int> sub;
                    std::queue<int> bq;
                    bq.push(v);
                    seen[static_cast<size_t>(v)] = true;
                    while (!bq.empty()) {
                        int x = bq.front();
                        bq.pop();
                        sub.push_back(x);
                        for (int w : fadj[static_cast<size_t>(x)])
                            if (!seen[static_cast<size_t>(w)]) {
                                seen[static_cast<size_t>(w)] = true;
                                bq.push(w);
                            }
                    }
                    auto side = tree_side(fadj, sub);
                    chosen.insert(chosen.end(), side.begin(), side.end());
                }
            }
        }
    } else {
        // greedy coloring in smallest-last order; degeneracy <= 2d
        const int n = g.order;
        std::vector<int> deg(static_cast<size_t>(n));
        std::vector<bool> gone(static_cast<size_t>(n), false);
        for (int v = 0; v < n; ++v)
            deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        std::vector<int> order;
        order.reserve(static_cast<size_t>(n));
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (!gone[static_cast<size_t>(v)] &&
                    (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                    best = v;
            gone[static_cast<size_t>(best)] = true;
            order.push_back(best);
            for (int w : adj[static_cast<size_t>(best)])
                if (!gone[static_cast<size_t>(w)])
                    --deg[static_cast<size_t>(w)];
        }
        std::reverse(order.begin(), order.end());
        std::vector<int> color(static_cast<size_t>(n), -1);
        int num_colors = 0;
        for (int v : order) {
            std::set<int> used;
            for (int w : adj[static_cast<size_t>(v)])
                if (color[static_cast<size_t>(w)] != -1)
                    used.insert(color[static_cast<size_t>(w)]);
            int c = 0;
            while (used.count(c))
                ++c;
            color[static_cast<size_t>(v)] = c;
            num_colors = std::max(num_colors, c + 1);
        }
        std::vector<std::vector<int>> classes(static_cast<size_t>(num_colors));
        for (int v = 0; v < n; ++v)
            classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
        size_t best = 0;
        for (size_t c = 1; c < classes.size(); ++c)
            if (classes[c].size() > classes[best].size() ||
                (classes[c].size() == classes[best].size() && classes[c] < classes[best]))
                best = c;
        chosen = classes[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

// Exclusive sub-star extraction shared by the two finders: pick r edges
// incident to one center whose images miss each other's endpoints.
std::optional<std::vector<int>> exclusive_edges(const Graph& host, const EdgeMapping& f,
                                                const std::vector<int>& star_edges, int r) {
    const int t = static_cast<int>(star_edges.size());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j)
                continue;
            const Edge& img = host.edge(f(star_edges[static_cast<size_t>(i)]));
            const Edge& ej = host.edge(star_edges[static_cast<size_t>(j)]);
            if (img.u == ej.u || img.u == ej.v || img.v == ej.u || img.v == ej.v)
                arcs.emplace_back(i, j);
        }
    FunctionalDigraph gamma = FunctionalDigraph::from_arcs(t, arcs);
    gamma.d = 2; // images avoid the center, so at most two hits
    auto ind = independent_set(gamma);
    if (static_cast<int>(ind.size()) < r)
        return std::nullopt;
    std::vector<int> picked;
    for (int i = 0; i < r; ++i)
        picked.push_back(star_edges[static_cast<size_t>(ind[static_cast<size_t>(i)])]);
    std::sort(picked.begin(), picked.end());
    return picked;
}

PatternCopy copy_from_edges(const Graph& host, std::vector<int> edges) {
    PatternCopy c;
    std::set<int> vs;
    for (int e : edges) {
        vs.insert(host.edge(e).u);
        vs.insert(host.edge(e).v);
    }
    std::sort(edges.begin(), edges.end());
    c.edges = std::move(edges);
    c.vertices.assign(vs.begin(), vs.end());
    return c;
}

} // namespace

std::optional<PatternCopy> find_exclusive_star(const Graph& host, const EdgeMapping& f, int r) {
    if (f.d != 0)
        throw std::invalid_argument("exclusive star extraction needs a distance-0 mapping");
    if (r < 1)
        throw std::invalid_argument("star size must be positive");
    for (int v = 0; v < host.order(); ++v) {
        if (host.degree(v) < 5 * r - 4)
            continue;
        std::vector<int> star_edges;
        for (int w : host.neighbors(v))
            star_edges.push_back(host.edge_index(v, w));
        std::sort(star_edges.begin(), star_edges.end());
        auto picked = exclusive_edges(host, f, star_edges, r);
        if (!picked)
            throw std::logic_error("independence bound below ceil(deg/5)");
        PatternCopy result = copy_from_edges(host, *picked);
        if (!is_f_exclusive(result, f))
            throw std::logic_error("extracted star failed the exclusivity re-check");
        return result;
    }
    return std::nullopt;
}

std::optional<PatternCopy> find_exclusive_star_forest(const Graph& host, const EdgeMapping& f,
                                                      int r, int t) {
    if (f.d != 0)
        throw std::invalid_argument("exclusive star-forest extraction needs a distance-0 mapping");
    if (r < 1 || t < 1)
        throw std::invalid_argument("star size and count must be positive");
    const int star_deg = 5 * r - 4;
    const int needed = (4 * r + 1) * (t - 1) + 1;

    // greedy vertex-disjoint K_{1,star_deg} packing
    std::vector<bool> used(static_cast<size_t>(host.order()), false);
    std::vector<std::vector<int>> packs; // edge lists
    for (int v = 0; v < host.order(); ++v) {
        if (used[static_cast<size_t>(v)])
            continue;
        std::vector<int> leaves;
        for (int w : host.neighbors(v))
            if (!used[static_cast<size_t>(w)])
                leaves.push_back(w);
        if (static_cast<int>(leaves.size()) < star_deg)
            continue;
        leaves.resize(static_cast<size_t>(star_deg));
        used[static_cast<size_t>(v)] = true;
        std::vector<int> es;
        for (int w : leaves) {
            used[static_cast<size_t>(w)] = true;
            es.push_back(host.edge_index(v, w));
        }
        std::sort(es.begin(), es.end());
        packs.push_back(std::move(es));
    }
    if (static_cast<int>(packs.size()) < needed)
        return std::nullopt;

    std::vector<PatternCopy> stars;
    for (const auto& es : packs) {
        auto picked = exclusive_edges(host, f, es, r);
        if (!picked)
            throw std::logic_error("independence bound below ceil((5r-4)/5)");
        stars.push_back(copy_from_edges(host, *picked));
    }

    std::vector<std::pair<int, int>> arcs;
    for (size_t i = 0; i < stars.size(); ++i)
        for (size_t j = 0; j < stars.size(); ++j) {
            if (i == j)
                continue;
            for (int e : stars[i].edges) {
                const Edge& img = host.edge(f(e));
                if (stars[j].contains_vertex(img.u) || stars[j].contains_vertex(img.v)) {
                    arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    break;
                }
            }
        }
    FunctionalDigraph gamma = FunctionalDigraph::from_arcs(static_cast<int>(stars.size()), arcs);
    gamma.d = 2 * r;
    auto ind = independent_set(gamma);
    if (static_cast<int>(ind.size()) < t)
        throw std::logic_error("star-level independence bound not met");

    std::vector<int> all_edges;
    for (int i = 0; i < t; ++i) {
        const PatternCopy& s = stars[static_cast<size_t>(ind[static_cast<size_t>(i)])];
        all_edges.insert(all_edges.end(), s.edges.begin(), s.edges.end());
    }
    PatternCopy result = copy_from_edges(host, std::move(all_edges));
    if (!is_f_exclusive(result, f))
        throw std::logic_error("extracted star forest failed the exclusivity re-check");
    return result;
}

} // namespace edgemap
