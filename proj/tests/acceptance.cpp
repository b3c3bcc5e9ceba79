// Acceptance suite: runs every verification suite and prints one pass/fail
// line per criterion, with the measured runtimes. Exit status is nonzero if
// any criterion fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hyperpot/verify.hpp"

using hyperpot::CheckResult;
using hyperpot::SuiteReport;

namespace {

bool checks_pass(const SuiteReport& report, const std::vector<std::string>& prefixes,
                 std::string& failed) {
    bool seen_any = false;
    for (const CheckResult& c : report.checks) {
        bool selected = prefixes.empty();
        for (const std::string& p : prefixes)
            if (c.name.rfind(p, 0) == 0) selected = true;
        if (!selected) continue;
        seen_any = true;
        if (!c.pass) failed += " [" + c.name + ": " + c.detail + "]";
    }
    if (!seen_any) failed += " [no checks matched]";
    return seen_any && failed.empty();
}

} // namespace

int main() {
    std::map<std::string, SuiteReport> suites;
    for (const std::string& name :
         {"newton", "arnold", "ivory", "theorem4", "lattice", "milnor"})
        suites.emplace(name, hyperpot::verify_suite(name));

    struct Criterion {
        int number;
        std::string title;
        std::string suite;
        std::vector<std::string> prefixes; // empty = whole suite
        double time_limit;                 // seconds; <=0 means no limit
    };

    const std::vector<Criterion> criteria{
        {1, "Newton interior/exterior potentials", "newton", {}, 10.0},
        {2, "Arnold constancy for the concentric-circle charge", "arnold", {}, 10.0},
        {3, "Ivory proportionality for confocal ellipsoids", "ivory", {}, 60.0},
        {4, "plane-curve orbit counts", "theorem4", {}, 0.0},
        {5,
         "lattice engine properties",
         "lattice",
         {"reflection involutivity", "reflections preserve", "orbits stay",
          "generator reflections fix", "spectra are invariant", "D~4 kernel", "D4 orbit"},
         30.0},
        {6,
         "finiteness for d=2 and growth for the hyperbolic counterexample",
         "lattice",
         {"quadric model probe", "hyperbolic-signature probe"},
         0.0},
        {7, "Milnor rank cross-identity", "milnor", {}, 1.0},
        {8,
         "reduced Arnold class model",
         "lattice",
         {"reduced class pairing", "reduced class orbits"},
         0.0},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const SuiteReport& report = suites.at(c.suite);
        std::string failed;
        bool pass = checks_pass(report, c.prefixes, failed);
        double seconds = report.seconds;
        if (c.time_limit > 0 && seconds > c.time_limit) {
            pass = false;
            failed += " [runtime limit exceeded]";
        }
        all_pass = all_pass && pass;
        char limit_text[64] = "";
        if (c.time_limit > 0)
            std::snprintf(limit_text, sizeof limit_text, ", limit %.0f s", c.time_limit);
        std::printf("criterion %d (%s): %s  [suite %s, %.2f s%s]%s\n", c.number, c.title.c_str(),
                    pass ? "PASS" : "FAIL", c.suite.c_str(), seconds, limit_text, failed.c_str());
    }
    return all_pass ? 0 : 1;
}
