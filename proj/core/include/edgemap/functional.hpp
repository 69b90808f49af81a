#ifndef EDGEMAP_FUNCTIONAL_HPP
#define EDGEMAP_FUNCTIONAL_HPP

#include <optional>
#include <vector>

#include "edgemap/graph.hpp"
#include "edgemap/mapping.hpp"
#include "edgemap/patterns.hpp"

namespace edgemap {

/// Directed graph with bounded out-degree. Underlying undirected
/// components are trees or unicyclic when d = 1.
struct FunctionalDigraph {
    int order = 0;
    std::vector<std::vector<int>> out; // out-neighbor lists, each of size <= d
    int d = 1;

    static FunctionalDigraph from_arcs(int order, const std::vector<std::pair<int, int>>& arcs);
};

/// Digraph of a mapping over an edge-set partition: an arc from part i
/// to part j (i != j) iff some e in part i has f(e) in part j. The
/// default partition is singletons, giving the plain mapping digraph.
/// Overlapping or non-covering partitions are rejected.
FunctionalDigraph build_gamma(const EdgeMapping& f,
                              const std::optional<std::vector<std::vector<int>>>& partition = {});

/// An independent set of the underlying undirected graph of size at
/// least ceil(n / (2d+1)). For d = 1 with m zero-out-degree vertices the
/// bound improves to m + ceil((n-2m)/3), via 2-coloring tree components
/// and 3-coloring unicyclic ones. Largest valid class wins; ties break
/// toward smaller vertex indices.
std::vector<int> independent_set(const FunctionalDigraph& g);

/// If some vertex has degree >= 5r-4, extracts an f-exclusive K_{1,r}
/// centered there (the incident-edge digraph has out-degree <= 2 for
/// distance-0 mappings, so a fifth of the edges are independent).
/// Returns nullopt when no vertex meets the degree hypothesis.
std::optional<PatternCopy> find_exclusive_star(const Graph& host, const EdgeMapping& f, int r);

/// Extracts an f-exclusive tK_{1,r} from (4r+1)(t-1)+1 vertex-disjoint
/// copies of K_{1,5r-4}: per-copy exclusive stars first, then an
/// independent set of the star-level digraph (out-degree <= 2r).
/// Returns nullopt when the greedy packing finds too few copies.
std::optional<PatternCopy> find_exclusive_star_forest(const Graph& host, const EdgeMapping& f,
                                                      int r, int t);

} // namespace edgemap

#endif
