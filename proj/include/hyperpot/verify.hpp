#ifndef HYPERPOT_VERIFY_HPP
#define HYPERPOT_VERIFY_HPP

#include <string>
#include <vector>

namespace hyperpot {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // measured value vs tolerance, human readable
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool all_pass() const;
};

/// Suites: newton, arnold, ivory, theorem4, lattice, milnor.
/// Each runs its quantitative checks at the pinned tolerances.
SuiteReport verify_suite(const std::string& name);

const std::vector<std::string>& verify_suite_names();

} // namespace hyperpot

#endif
