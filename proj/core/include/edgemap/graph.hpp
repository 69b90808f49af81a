#ifndef EDGEMAP_GRAPH_HPP
#define EDGEMAP_GRAPH_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgemap {

/// Thrown when an operation would exceed a documented engine budget
/// (order/edge caps, search node limits, wall-clock deadlines).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order; the position of an edge in
/// edges() is its stable edge index, used by mappings, copies and
/// certificates throughout the library. Immutable after construction:
/// the "mutators" below return modified copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    /// Builds from an edge list. Rejects loops, out-of-range endpoints
    /// and duplicate edges.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    bool has_edge(int u, int v) const;
    /// Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;
    int degree(int v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<size_t>(v)]; }

    /// True iff edges e1, e2 share no vertex.
    bool edges_disjoint(int e1, int e2) const;
    /// True iff vertex v is an endpoint of edge e.
    bool edge_covers(int e, int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int edge_idx) const;
    /// Drops all degree-0 vertices, relabeling the rest downward in order.
    Graph without_isolated_vertices() const;
    /// Appends isolated vertices until the graph has the given order.
    Graph padded(int order) const;
    /// Applies the vertex permutation perm (perm[old] = new).
    Graph relabeled(const std::vector<int>& perm) const;
    Graph complement() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // lex sorted
    std::vector<std::vector<int>> nbrs_; // sorted adjacency lists
    std::vector<int> eidx_;              // n*n flat matrix of edge indices, -1 if absent

    void rebuild_index();
};

// Graph operators (vertex-disjoint union, join, k disjoint copies).
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph k_copies(const Graph& g, int k);

/// Proper 2-coloring (colors 0/1; smallest vertex of each component gets 0),
/// or nullopt if the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

struct DegreeStats {
    int max_degree = 0;
    std::vector<int> sequence;              // descending
    std::optional<int> bipartite_min_max;   // Delta* for bipartite graphs
};

DegreeStats degree_stats(const Graph& g);

/// Delta*: min over the two color classes of the class's maximum degree.
/// Throws std::domain_error on non-bipartite input.
int delta_star(const Graph& g);

} // namespace edgemap

#endif
