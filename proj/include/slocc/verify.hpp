#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slocc/types.hpp"

namespace slocc::verify {

/// Identities among directly computed polynomials.
inline constexpr double kIdentityTol = 1e-10;
/// Comparisons after random determinant-1 conjugation.
inline constexpr double kSlTol = 1e-8;
/// Entrywise structural checks (L + M + N, rho = X^dagger X).
inline constexpr double kStructuralTol = 1e-12;
/// Singular values below this fraction of the largest are treated as zero.
inline constexpr double kRankThreshold = 1e-8;

struct TrialFailure {
    Seed seed;
    std::string description;
    double observed;
    double expected;
    double tolerance;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    std::vector<TrialFailure> failures;
    /// Summary numbers such as worst observed error or ranks.
    std::map<std::string, double> metrics;

    bool pass() const noexcept { return failures.empty(); }
};

/// Each trial draws one random state and maps_per_state sets of random
/// determinant-1 local operators.
SuiteReport check_sl_invariance(std::string_view invariant, const std::vector<int>& dims, int trials,
                                Seed seed, double tol = kSlTol, int maps_per_state = 1);

SuiteReport check_homogeneity(std::string_view invariant, const std::vector<int>& dims,
                              std::span<const double> lambdas, int trials, Seed seed,
                              double tol = kIdentityTol);

SuiteReport check_identities(int trials, Seed seed, double tol = kIdentityTol);

/// eta <= 4: random (state, party, POVM) trials must satisfy
/// mubar <= mu0 + tol. eta > 4: the explicit violating family must give
/// mubar/mu0 > 1, using the first beta in 0.1, 0.01, ..., 1e-7 whose closed
/// form ratio exceeds 1.
SuiteReport check_monotone(std::string_view invariant, double eta, const std::vector<int>& dims,
                           int trials, Seed seed, double tol = 1e-10);

SuiteReport check_rank(Seed seed);

nlohmann::json to_json(const SuiteReport& report);

}  // namespace slocc::verify
