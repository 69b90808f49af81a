#ifndef EDGEMAP_SOLVER_HPP
#define EDGEMAP_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "edgemap/graph.hpp"
#include "edgemap/mapping.hpp"
#include "edgemap/patterns.hpp"

namespace edgemap {

enum class VerdictKind {
    Avoider,        // a witness mapping with no f-free (resp. f-exclusive) copy
    Unavoidable,    // every legal mapping admits one
    NoLegalMapping, // F_{H,d} is empty (distinct from Unavoidable)
};

struct SearchStats {
    uint64_t nodes = 0;
    std::string shortcut; // non-empty when a proof shortcut settled the instance
    std::string detail;
};

struct AvoidanceVerdict {
    VerdictKind kind = VerdictKind::Unavoidable;
    std::optional<EdgeMapping> mapping; // present iff kind == Avoider
    SearchStats stats;
};

struct SolveOptions {
    uint64_t node_limit = 0; // 0 = unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Decides whether some f in F_{host,d} leaves no f-free (mode Free) or
/// f-exclusive (mode Exclusive, requires d = 0) copy of any family
/// member. The search assigns kill pairs f(e) = e' copy by copy,
/// branching on the unkilled copy with the fewest consistent options;
/// edges irrelevant to every copy get the smallest legal image.
/// Budget breaches raise budget_error.
AvoidanceVerdict exists_avoider(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                                const SolveOptions& opts = {});

/// Negation of the Avoider outcome; NoLegalMapping counts as avoidable.
bool is_unavoidable(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                    const SolveOptions& opts = {});

struct DecideOptions {
    bool counting_shortcut = true; // try the 2K2/K3 counting bound first
    bool fastpath_2k2 = false;     // route single-2K2 free/d=1 queries to the line-complement decision
    SolveOptions solve;
};

/// exists_avoider with the cheap exact routes tried first. All routes
/// are exact; the flags only affect how the answer is reached.
AvoidanceVerdict decide_avoidance(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                                  const DecideOptions& opts = {});

/// True iff host is unavoidable and every one-edge-deleted subgraph
/// (isolated vertices stripped) is avoidable. Edge deletions suffice by
/// upward monotonicity of unavoidability.
bool is_minimal_unavoidable(const Graph& host, const PatternFamily& patterns, int d, Mode mode,
                            const DecideOptions& opts = {});

/// Sound-but-incomplete unavoidability proof by counting.
///   2K2: more copies of 2K2 than edges lying in at least one copy
///        (each pair (e, f(e)) ruins at most one copy).
///   K3:  more triangles than edges (e and f(e) lie in at most one
///        common triangle).
struct CountingProof {
    std::string pattern; // "2K2" or "K3"
    long long copies = 0;
    long long budget = 0; // covered edges (2K2) or all edges (K3)
};

std::optional<CountingProof> counting_shortcut(const Graph& host, const Graph& pattern);

/// Searches for f over E(K_n) with at least m edges satisfying the
/// distance-d constraint (the rest are fixed points, which kill every
/// copy through them) and no f-free copy of any member in K_n.
/// Raw search budget: n <= 5.
std::optional<QMapping> exists_q_mapping(int n, const PatternFamily& patterns, int d, int m,
                                         const SolveOptions& opts = {});

/// Exclusive-mode analog over F_{n,m,0}: at least m edges with disjoint
/// images and no f-exclusive copy in K_n. n <= 5.
std::optional<QMapping> exists_p_mapping(int n, const PatternFamily& patterns, int m,
                                         const SolveOptions& opts = {});

/// Independent re-verification of an avoider certificate: true iff no
/// copy of any member is f-free (mode Free) / f-exclusive (Exclusive).
bool verify_avoider(const Graph& host, const PatternFamily& patterns, const EdgeMapping& f, Mode mode);

} // namespace edgemap

#endif
