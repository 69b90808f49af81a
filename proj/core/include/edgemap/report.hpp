#ifndef EDGEMAP_REPORT_HPP
#define EDGEMAP_REPORT_HPP

#include <string>
#include <vector>

#include "edgemap/census.hpp"
#include "edgemap/constructions.hpp"
#include "edgemap/extremal.hpp"
#include "edgemap/solver.hpp"

namespace edgemap {

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& s);
std::string verdict_name(VerdictKind kind);

/// Certificate and result reports. Output is byte-stable for a given
/// query: keys are emitted in fixed order and no timing data is
/// included.
std::string verdict_report(const Graph& host, const PatternFamily& family, int d, Mode mode,
                           const AvoidanceVerdict& verdict);
std::string construction_report(const Construction& c, bool verified);
std::string extremal_report(const ExtremalResult& r);
std::string census_report(const CensusBounds& bounds, const std::vector<CensusRecord>& records);

/// graph6 lines (one per record) for census output.
std::string census_graph6_lines(const std::vector<CensusRecord>& records);

/// Re-verifies a report produced by verdict_report or
/// construction_report: avoider mappings are re-checked exhaustively,
/// unavoidable verdicts are re-decided, counting proofs re-derived.
bool verify_report(const std::string& json_text, std::string* why = nullptr);

} // namespace edgemap

#endif
