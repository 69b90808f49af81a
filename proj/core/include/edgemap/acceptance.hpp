#ifndef EDGEMAP_ACCEPTANCE_HPP
#define EDGEMAP_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace edgemap {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    int workers = 0;
};

/// Reproduces every finitely checkable exact statement the library is
/// built around: small h/s/q values, the two minimal-family censuses,
/// fast-path/solver agreement, the construction grid, and the property
/// batteries (sandwich and strictness, the minimal-family identity,
/// monotonicity, certificate re-verification, independence bounds).
/// One line per criterion is written to log as results arrive.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {},
                                            std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace edgemap

#endif
