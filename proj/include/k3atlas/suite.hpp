#ifndef K3ATLAS_SUITE_HPP
#define K3ATLAS_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace k3atlas::suite {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail; // worst errors, counts, derived constants, witnesses
    double millis = 0.0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
    double total_millis = 0.0;

    void add(CheckResult r) {
        all_pass = all_pass && r.pass;
        total_millis += r.millis;
        checks.push_back(std::move(r));
    }
};

/// Every exact polynomial identity: the family block (fibration
/// discriminants, involution, covariance, two-isogeny) and the full Kummer
/// pipeline (Hudson, plane configuration, pencil, chain, parameter match).
SuiteReport run_exact_suite(int jobs = 1);

/// Seeded numeric sweeps: cusp-form route agreement, modularity, Humbert
/// detection, Igusa-Clebsch route consistency, Goepel census, isometry
/// checks, the symbolic/numeric chain bridge, and the split-case anchor.
SuiteReport run_numeric_suite(int samples, std::uint64_t seed, double eps, int jobs = 1);

SuiteReport run_all(int samples, std::uint64_t seed, double eps, int jobs = 1);

} // namespace k3atlas::suite

#endif
