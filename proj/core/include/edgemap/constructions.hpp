#ifndef EDGEMAP_CONSTRUCTIONS_HPP
#define EDGEMAP_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "edgemap/graph.hpp"
#include "edgemap/mapping.hpp"
#include "edgemap/patterns.hpp"
#include "edgemap/solver.hpp"

namespace edgemap {

/// A generated (host, witness, pattern family) triple. Avoider
/// constructions carry a mapping; unavoidability exhibits (the triangle
/// chain without a deleted edge) carry a counting proof instead.
struct Construction {
    std::string name;
    Graph host;
    std::optional<EdgeMapping> mapping;
    std::optional<CountingProof> proof;
    PatternFamily family;
    Mode mode = Mode::Free;
    int d = 1;
};

/// Exhaustive check that no copy of any family member is f-free
/// (mode Free) or f-exclusive (mode Exclusive).
bool verify_construction(const Graph& g, const EdgeMapping& f, const PatternFamily& patterns,
                         Mode mode);
/// Mapping constructions re-run the exhaustive check; proof
/// constructions re-derive the counting bound.
bool verify_construction(const Construction& c);

// --- generators ---

/// (t-1) disjoint K_{1,3(r-1)} with each star's edges mapped in cyclic
/// triples; avoider for the family {K_{1,r}, tK_2}.
Construction delta_system(int r, int t);

/// G-free host plus one extra edge e*; everything maps to e*. Avoider
/// for any pattern with >= 2 edges as long as the host is pattern-free.
Construction plus_edge(const Graph& host, const std::string& host_name, const Graph& pattern,
                       const std::string& pattern_name);

/// G-free host plus a matching on its maximum independent set; edges
/// touching a matching edge map to it. Pattern must have no isolated
/// edges.
Construction ind_matching(const Graph& host, const std::string& host_name, const Graph& pattern,
                          const std::string& pattern_name);

/// floor((n-1)/k) copies of a T-free block H plus an apex vertex joined
/// to every copy of H's maximum independent set; copy edges leaving the
/// independent set map to the apex spoke at their endpoint. For
/// non-star trees T.
Construction tree_blowup(const Graph& block, const std::string& block_name, const Graph& tree,
                         const std::string& tree_name, int n);

/// 2(Delta(T)-1)-regular circulant with f following a closed Eulerian
/// trail. Needs n > 2(Delta(T)-1).
Construction euler_regular(const Graph& tree, const std::string& tree_name, int n);

/// K_{3(D-1), n-3(D-1)} with D = Delta*(T); the small side is grouped
/// into triples mapped cyclically toward the shared big-side endpoint.
Construction bipartite_cyclic(const Graph& tree, const std::string& tree_name, int n);

/// K_3 + E_{n-3} with the triangle and every spoke fan mapped
/// cyclically; avoider for P_5.
Construction k3_join(int n);

/// Split graph K_{t-1} + E_{n-t+1} with an embedded (t-1)-edge star in
/// the independent part; spokes at u_i map to the star leaf edge v v_i.
/// Avoider for tK_2; needs n >= 2t-1.
Construction split_matching(int t, int n);

/// K_{1,n-1} plus an edge between two leaves; all star edges map to it.
/// Avoider for 2K_2.
Construction star_plus_edge(int n);

/// K_4 plus a pendant edge e; edges disjoint from e map to e, remaining
/// K_4 edges to their opposites. Avoider for 2K_2 with 7 edges.
Construction k4_pendant();

/// (3t-3)K_2 in cyclic triples; avoider for tK_2.
Construction matching_3t(int t);

/// D_{3r-4,k,3r-6} with one edge deleted, plus the cyclic-triple
/// avoider for K_{1,r} on the remainder. The deleted edge is classified
/// as end-leaf, path-leaf or path-edge and handled per case; the host
/// keeps its vertex labels (a stranded leaf may stay isolated).
Construction dstar_deleted(int r, int k, int delete_edge);

/// K_6 decomposed into five perfect matchings, each mapped cyclically;
/// distance-0 avoider with no exclusive K_{1,2}.
Construction k6_five_3k2();

/// Chain of k-2 copies of K_6 - E(2K_2) between two copies of
/// K_6 - E(P_3), consecutive pieces sharing an edge. Without a deletion
/// the result is an unavoidability exhibit for K_3 by triangle count;
/// with delete_edge set, builds the avoider whose triangle killers come
/// from a per-piece bipartite matching (infeasibility is reported, never
/// patched over).
Construction mk3_chain(int k, std::optional<int> delete_edge = std::nullopt);

/// Parses a construction spec string, e.g. "split:t=3,n=12",
/// "mk3chain:k=2,delete=7", "eulerreg:tree=P4,n=8". Graph-valued
/// parameters use the compact graph grammar (no commas).
Construction build_construction(const std::string& spec);

/// The documented small-parameter grid, used by the verification suite.
std::vector<std::string> construction_grid();

} // namespace edgemap

#endif
