#include "edgemap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace edgemap {

Graph::Graph(int order) : n_(order) {
    if (order < 0)
        throw std::invalid_argument("graph order must be non-negative");
    nbrs_.resize(static_cast<size_t>(n_));
    rebuild_index();
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("loop edge rejected");
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        es.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        throw std::invalid_argument("duplicate edge rejected");
    g.edges_ = std::move(es);
    for (const Edge& e : g.edges_) {
        g.nbrs_[static_cast<size_t>(e.u)].push_back(e.v);
        g.nbrs_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : g.nbrs_)
        std::sort(nb.begin(), nb.end());
    g.rebuild_index();
    return g;
}

void Graph::rebuild_index() {
    eidx_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
    for (int e = 0; e < size(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        eidx_[static_cast<size_t>(ed.u) * static_cast<size_t>(n_) + static_cast<size_t>(ed.v)] = e;
        eidx_[static_cast<size_t>(ed.v) * static_cast<size_t>(n_) + static_cast<size_t>(ed.u)] = e;
    }
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return -1;
    return eidx_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
}

bool Graph::edges_disjoint(int e1, int e2) const {
    const Edge& a = edges_[static_cast<size_t>(e1)];
    const Edge& b = edges_[static_cast<size_t>(e2)];
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

bool Graph::edge_covers(int e, int v) const {
    const Edge& a = edges_[static_cast<size_t>(e)];
    return a.u == v || a.v == v;
}

Graph Graph::with_edge(int u, int v) const {
    if (has_edge(u, v))
        throw std::invalid_argument("edge already present");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size() + 1);
    for (const Edge& e : edges_)
        es.emplace_back(e.u, e.v);
    es.emplace_back(u, v);
    return from_edges(n_, es);
}

Graph Graph::without_edge(int edge_idx) const {
    if (edge_idx < 0 || edge_idx >= size())
        throw std::invalid_argument("edge index out of range");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size() - 1);
    for (int e = 0; e < size(); ++e)
        if (e != edge_idx)
            es.emplace_back(edges_[static_cast<size_t>(e)].u, edges_[static_cast<size_t>(e)].v);
    return from_edges(n_, es);
}

Graph Graph::without_isolated_vertices() const {
    std::vector<int> map(static_cast<size_t>(n_), -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 0)
            map[static_cast<size_t>(v)] = next++;
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.emplace_back(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
    return from_edges(next, es);
}

Graph Graph::padded(int order) const {
    if (order < n_)
        throw std::invalid_argument("padded order smaller than current order");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.emplace_back(e.u, e.v);
    return from_edges(order, es);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(p)] = true;
    }
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
    return from_edges(n_, es);
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                es.emplace_back(u, v);
    return from_edges(n_, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(g.size() + h.size()));
    for (const Edge& e : g.edges())
        es.emplace_back(e.u, e.v);
    for (const Edge& e : h.edges())
        es.emplace_back(e.u + g.order(), e.v + g.order());
    return Graph::from_edges(g.order() + h.order(), es);
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges())
        es.emplace_back(e.u, e.v);
    for (const Edge& e : h.edges())
        es.emplace_back(e.u + g.order(), e.v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            es.emplace_back(u, v + g.order());
    return Graph::from_edges(g.order() + h.order(), es);
}

Graph k_copies(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("copy count must be non-negative");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(g.size()) * static_cast<size_t>(k));
    for (int c = 0; c < k; ++c)
        for (const Edge& e : g.edges())
            es.emplace_back(e.u + c * g.order(), e.v + c * g.order());
    return Graph::from_edges(g.order() * k, es);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[static_cast<size_t>(s)] != -1)
            continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<size_t>(s)])
            continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.sequence.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        s.sequence.push_back(g.degree(v));
    std::sort(s.sequence.rbegin(), s.sequence.rend());
    s.max_degree = s.sequence.empty() ? 0 : s.sequence.front();
    if (auto colors = bipartition(g)) {
        int d0 = 0, d1 = 0;
        for (int v = 0; v < g.order(); ++v) {
            if ((*colors)[static_cast<size_t>(v)] == 0)
                d0 = std::max(d0, g.degree(v));
            else
                d1 = std::max(d1, g.degree(v));
        }
        s.bipartite_min_max = std::min(d0, d1);
    }
    return s;
}

int delta_star(const Graph& g) {
    auto s = degree_stats(g);
    if (!s.bipartite_min_max)
        throw std::domain_error("Delta* requested for a non-bipartite graph");
    return *s.bipartite_min_max;
}

} // namespace edgemap
