#ifndef EDGEMAP_NAMED_HPP
#define EDGEMAP_NAMED_HPP

#include <string>
#include <vector>

#include "edgemap/graph.hpp"

namespace edgemap {

/// Catalog of named graph families. Labelings are fixed per kind (see
/// build_named) so certificates are reproducible bit for bit.
enum class GraphKind {
    Complete,          // K_n            params: n
    Empty,             // E_n            params: n
    Path,              // P_n            params: n (vertices)
    Cycle,             // C_n            params: n >= 3
    CompleteBipartite, // K_{a,b}        params: a, b
    Star,              // K_{1,r}        params: r
    DoubleStar,        // D_{a,b}        params: a, b (leaves per center)
    Matching,          // tK_2           params: t
    CyclePlus,         // C_k^+          params: k >= 3 (cycle with a pendant edge)
    BGraph,            // B_k            params: k (subdivided double star D_{2,k,0})
    W4Minus,           // 5 vertices, C_4 plus a degree-3 vertex
    C4PlusPlus,        // C_4 with pendant edges at two antipodal vertices
    H1,                // K_6 minus the edges of a P_3
    H2,                // K_6 minus the edges of a 2K_2
    Split,             // K_a + E_b (join)  params: a, b
    DLeaf,             // D_{l,k,l'}     params: l, k, l'
    Circulant,         // params: n, step set
};

struct NamedGraphSpec {
    GraphKind kind;
    std::vector<int> params;

    std::string to_string() const;
};

/// Realizes a named graph with its documented labeling:
///   K_n, E_n:  vertices 0..n-1.
///   P_n:       path 0-1-...-(n-1).
///   C_n:       cycle 0-1-...-(n-1)-0.
///   K_{a,b}:   parts {0..a-1}, {a..a+b-1}.
///   K_{1,r}:   center 0, leaves 1..r.
///   D_{a,b}:   centers u=0, v=1; leaves of u: 2..a+1; of v: a+2..a+b+1.
///   tK_2:      edges (2i, 2i+1).
///   C_k^+:     cycle 0..k-1, pendant vertex k attached at 0.
///   W4^-:      cycle 0-1-2-3-0, vertex 4 adjacent to 0,1,2.
///   C_4^{++}:  cycle 0-1-2-3-0, pendants 4 at 0 and 5 at 2.
///   H_1:       K_6 on 0..5 minus {01, 12}.
///   H_2:       K_6 on 0..5 minus {01, 23}.
///   K_a + E_b: clique 0..a-1 joined to independent a..a+b-1.
///   D_{l,k,l'}: path u=0,..,v=k; leaves of u: k+1..k+l; of v: k+l+1..k+2l;
///              l' leaves per internal path vertex, grouped in path order.
///   circulant: vertices 0..n-1, i ~ i+s (mod n) for each step s.
/// Invalid parameters raise std::invalid_argument.
Graph build_named(const NamedGraphSpec& spec);

/// Parses a textual graph spec. Two grammars are accepted:
///   colon form:  "K:5", "E:4", "P:6", "C:5", "Kab:3,4", "star:4",
///                "dstar:2,2", "M:3", "Ckplus:5", "B:2", "W4minus",
///                "C4pp", "H1", "H2", "split:3,5", "D:2,3,0",
///                "circ:8,1,2"
///   compact:     "K4", "E5", "P3", "C6", "2K2", "K1,4", "S4",
///                "D2-2" (double star), "KB3-4", "B2", "Ckplus5"
/// plus "g6:<graph6>" for explicit graph6 input.
NamedGraphSpec parse_named_spec(const std::string& s);
Graph parse_graph_spec(const std::string& s);

} // namespace edgemap

#endif
