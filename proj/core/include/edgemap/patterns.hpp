#ifndef EDGEMAP_PATTERNS_HPP
#define EDGEMAP_PATTERNS_HPP

#include <string>
#include <vector>

#include "edgemap/graph.hpp"
#include "edgemap/mapping.hpp"

namespace edgemap {

/// A family of pattern graphs. Members must have at least one edge;
/// isolated vertices are stripped on construction (the avoidance
/// predicates depend only on a copy's edges and their endpoints).
struct PatternFamily {
    std::vector<Graph> members;
    std::vector<std::string> names;

    static PatternFamily of(const Graph& g, std::string name = "");
    static PatternFamily of(std::vector<Graph> gs, std::vector<std::string> names = {});
    /// Delta(r,t) = {K_{1,r}, tK_2}.
    static PatternFamily delta(int r, int t);
    /// Parses a list of spec strings; "Delta:r,t" expands to both members.
    static PatternFamily parse(const std::vector<std::string>& specs);

    std::string to_string() const;
};

/// One subgraph copy of a pattern inside a host: the host edge indices
/// forming the copy plus their endpoint set. Copies are deduplicated by
/// edge set, so automorphic re-embeddings collapse to one copy.
struct PatternCopy {
    std::vector<int> vertices; // sorted
    std::vector<int> edges;    // sorted host edge indices
    int member = 0;            // index into the family

    bool contains_vertex(int v) const;
    bool contains_edge(int e) const;
};

/// All (not necessarily induced) subgraph copies of pattern in host,
/// duplicate-free, sorted by edge set. Pattern needs >= 1 edge.
std::vector<PatternCopy> enumerate_copies(const Graph& host, const Graph& pattern);

/// Copies of every family member, tagged with the member index.
std::vector<PatternCopy> enumerate_family_copies(const Graph& host, const PatternFamily& family);

/// True iff host contains at least one copy of pattern (early exit).
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// f-free: no edge of the copy maps into the copy's edge set.
bool is_f_free(const PatternCopy& copy, const EdgeMapping& f);

/// f-exclusive: every copy edge maps to an edge disjoint from the
/// copy's vertex set.
bool is_f_exclusive(const PatternCopy& copy, const EdgeMapping& f);

} // namespace edgemap

#endif
