#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace thermo::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // measured worst-case values against their thresholds
};

inline constexpr std::uint64_t kDefaultSeed = 20261019;

CriterionResult gas_chord_criterion();
CriterionResult cw_chord_criterion();
CriterionResult thermodynamic_identities_criterion(std::uint64_t seed = kDefaultSeed);
CriterionResult gibbs_minimality_criterion(std::uint64_t seed = kDefaultSeed);
CriterionResult barred_maps_criterion(std::uint64_t seed = kDefaultSeed);
CriterionResult fokker_planck_criterion(std::uint64_t seed = kDefaultSeed);
CriterionResult reduction_soundness_criterion(std::uint64_t seed = kDefaultSeed);
CriterionResult slow_fixed_point_criterion();
CriterionResult monotonicity_criterion();
CriterionResult chord_existence_criterion(std::uint64_t seed = kDefaultSeed);

/// Every criterion in order.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// One "[PASS]/[FAIL] <id> <name>: <detail>" line per criterion; returns true
/// when all passed.
bool print_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace thermo::acceptance
