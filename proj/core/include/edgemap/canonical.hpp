#ifndef EDGEMAP_CANONICAL_HPP
#define EDGEMAP_CANONICAL_HPP

#include <string>
#include <vector>

#include "edgemap/graph.hpp"

namespace edgemap {

/// Canonical encoding of an isomorphism class. Two graphs have equal
/// forms iff they are isomorphic. The bytes are the graph6 string of
/// the canonically relabeled graph, so forms can be written out and
/// decoded back directly.
struct CanonicalForm {
    std::string bytes;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form by backtracking over vertex orderings, minimizing the
/// packed adjacency bit string. Prunes lexicographically dominated
/// prefixes and interchangeable twin candidates. Orders above 16 raise
/// budget_error.
CanonicalForm canonical_form(const Graph& g);

/// The permutation (old label -> canonical label) realizing canonical_form.
std::vector<int> canonical_labeling(const Graph& g);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

/// Reference oracle: minimum over all order()! permutations. Orders
/// above 8 raise budget_error.
CanonicalForm canonical_form_bruteforce(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace edgemap

#endif
