#ifndef EDGEMAP_EXTREMAL_HPP
#define EDGEMAP_EXTREMAL_HPP

#include <optional>
#include <string>

#include "edgemap/graph.hpp"
#include "edgemap/mapping.hpp"
#include "edgemap/patterns.hpp"
#include "edgemap/solver.hpp"

namespace edgemap {

struct ExtremalResult {
    std::string func; // "ex", "h", "s", "q" or "p"
    int n = 0;
    PatternFamily family;
    int value = 0;
    std::optional<Graph> witness;       // host graph, padded to n vertices
    std::optional<EdgeMapping> mapping; // for h and s
    std::optional<QMapping> qmapping;   // for q and p
    SearchStats stats;
};

struct ExtremalOptions {
    int workers = 0;
    SolveOptions solve;
    /// Known-complete list of minimal unavoidable graphs within the
    /// order bound; hosts containing one are pruned without solving.
    /// Soundness is the caller's responsibility, so pass it only from a
    /// finished census.
    const std::vector<Graph>* unavoidable_cache = nullptr;
};

/// Exact Turán number with a witness, by edge-augmentation restricted
/// to family-free graphs. n <= 9.
ExtremalResult compute_ex(int n, const PatternFamily& family, const ExtremalOptions& opts = {});

/// Maximum edges of an n-vertex host admitting an avoider (free mode,
/// d = 1), searched by descending edge count below the sandwich cap
/// 3 ex(n, family). n <= 8.
ExtremalResult compute_h(int n, const PatternFamily& family, const ExtremalOptions& opts = {});

/// Exclusive-mode analog over F_{H,0}; hosts with no legal distance-0
/// mapping are skipped. n <= 6.
ExtremalResult compute_s(int n, const PatternFamily& family, const ExtremalOptions& opts = {});

/// Largest m admitting an f over E(K_n) with >= m non-fixed edges and
/// no f-free copy, by bisection over exists_q_mapping. n <= 5.
ExtremalResult compute_q(int n, const PatternFamily& family, const ExtremalOptions& opts = {});

/// Exclusive analog of q over F_{n,m,0}; reported alongside s for
/// comparison, no equality claimed. n <= 5.
ExtremalResult compute_p(int n, const PatternFamily& family, const ExtremalOptions& opts = {});

} // namespace edgemap

#endif
