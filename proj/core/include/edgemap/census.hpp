#ifndef EDGEMAP_CENSUS_HPP
#define EDGEMAP_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgemap/canonical.hpp"
#include "edgemap/graph.hpp"
#include "edgemap/patterns.hpp"
#include "edgemap/solver.hpp"

namespace edgemap {

/// One enumerated graph with its avoidance flags.
struct CensusRecord {
    CanonicalForm form;
    int order = 0;
    int edge_count = 0;
    bool unavoidable = false;
    bool minimal = false;
    SearchStats stats;
};

struct CensusBounds {
    int max_order = 0;  // N <= 10
    int max_edges = 0;  // M <= 28
    PatternFamily family;
    int d = 1;
    Mode mode = Mode::Free;
};

struct CensusOptions {
    int workers = 0; // 0 = use available parallelism
    std::optional<std::string> checkpoint_path;
    DecideOptions decide{.counting_shortcut = true, .fastpath_2k2 = true, .solve = {}};
};

/// Canonical representatives of all graphs without isolated vertices,
/// grouped by edge count up to max_edges. Exactly one representative
/// per isomorphism class; level m+1 is generated from level m by edge
/// augmentation (existing pair, one new vertex, or a fresh K_2) with
/// canonical-form dedup. Level 0 holds the empty graph.
std::vector<std::vector<Graph>> enumerate_levels(int max_order, int max_edges);

/// Flattened enumerate_levels without the empty graph.
std::vector<Graph> enumerate_graphs(int max_order, int max_edges);

/// All minimal unavoidable graphs within the bounds, sorted by
/// (edge count, canonical bytes). Results are independent of the worker
/// count; the optional checkpoint file makes the run resumable per
/// edge-count level.
std::vector<CensusRecord> census_minimal(const CensusBounds& bounds,
                                         const CensusOptions& opts = {});

} // namespace edgemap

#endif
