#ifndef EDGEMAP_FASTPATH_HPP
#define EDGEMAP_FASTPATH_HPP

#include "edgemap/graph.hpp"
#include "edgemap/solver.hpp"

namespace edgemap {

/// Complement of the line graph: vertices are host edge indices,
/// adjacent iff the host edges are vertex-disjoint. Its edges are
/// exactly the 2K2 copies of the host.
struct LineComplement {
    std::vector<std::vector<int>> adj; // sorted neighbor lists
    int edge_count = 0;
};

LineComplement line_complement(const Graph& host);

/// Polynomial 2K2 decision (free mode, d = 1): an avoider exists iff
/// every component of the line-graph complement has at most as many
/// edges as vertices. Avoiders are built from an out-degree-1
/// orientation (cycle directed around, trees directed toward a doubled
/// edge); otherwise the overloaded component is reported.
AvoidanceVerdict fast_2k2_decide(const Graph& host);

} // namespace edgemap

#endif
