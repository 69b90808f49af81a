#ifndef EDGEMAP_MAPPING_HPP
#define EDGEMAP_MAPPING_HPP

#include <vector>

#include "edgemap/graph.hpp"

namespace edgemap {

/// Free mode asks for copies with no edge mapped into the copy;
/// exclusive mode asks for copies with no edge mapped to an edge
/// meeting the copy's vertices. Exclusive mode requires d = 0.
enum class Mode { Free, Exclusive };

/// A total self-map of a host's edge set under distance class d.
///   d = 1: f(e) != e for every edge (two distinct edges always share
///          at most one vertex, so this is the whole constraint).
///   d = 0: f(e) shares no vertex with e.
struct EdgeMapping {
    Graph host;
    std::vector<int> image; // edge index -> edge index
    int d = 1;

    EdgeMapping() = default;
    EdgeMapping(Graph host_, std::vector<int> image_, int d_);

    int operator()(int e) const { return image[static_cast<size_t>(e)]; }
    bool is_legal() const;
    /// Throws std::invalid_argument if the mapping violates the d constraint.
    void validate() const;
};

/// A mapping over E(K_n) where only the edges with |f(e) ∩ e| <= d are
/// counted; the remaining edges are fixed points (f(e) = e), which keep
/// every copy through them from being f-free or f-exclusive.
struct QMapping {
    int n = 0;
    std::vector<int> image; // over E(K_n), index order of Graph(K_n)
    int d = 1;
    int free_count = 0;

    bool is_consistent() const;
};

} // namespace edgemap

#endif
