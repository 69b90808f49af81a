#ifndef EDGEMAP_GRAPH6_HPP
#define EDGEMAP_GRAPH6_HPP

#include <string>

#include "edgemap/graph.hpp"

namespace edgemap {

/// Standard graph6 text encoding (bit-packed upper triangle, column order).
/// Supports orders up to 258047; an optional ">>graph6<<" header is accepted
/// on decode. Malformed input raises std::invalid_argument.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

} // namespace edgemap

#endif
