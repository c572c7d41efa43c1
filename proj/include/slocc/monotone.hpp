#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "slocc/povm.hpp"

namespace slocc {

/// A sweep record holds when rhs <= 1 + kHoldsSlack.
inline constexpr double kHoldsSlack = 1e-12;

/// f_eta(alpha, beta, x) = alpha beta [alpha beta / (x alpha^2 + (1-x) beta^2)]^{eta/2 - 1}.
///
/// eta = 0 is the closed form x alpha^2 + (1-x) beta^2. For eta > 0 the
/// value is 0 whenever alpha or beta is 0, the continuous limit. Throws
/// std::domain_error outside alpha, beta, x in [0, 1], eta >= 0.
double f_eta(double alpha, double beta, double x, double eta);

/// f_eta(a, b, x) + f_eta(sqrt(1-a^2), sqrt(1-b^2), x). Monotonicity of a
/// degree-eta invariant under the two-outcome POVM is rhs <= 1. Throws at
/// the corners a = b = 0 and a = b = 1.
double inequality_rhs(double a, double b, double x, double eta);

/// (1 - eta/4) f_0 + (eta/4) f_4 - f_eta for 0 < eta < 4, alpha, beta in (0, 1).
double convexity_gap(double alpha, double beta, double x, double eta);

/// 2^{1-eta/2} beta^{2-eta/2} alpha^{-eta/2}: mubar/mu for the diagonal
/// POVM a = beta/alpha, b = 1 on alpha|0>|phi_0> + beta|1>|phi_1>.
double violation_ratio(double alpha, double beta, double eta);

struct ViolationReport {
    double eta;
    double alpha;
    double beta;
    double ratio;
    /// State-level mubar / mu0.
    double simulated;
    bool violated() const noexcept { return simulated > 1.0; }
};

/// Builds alpha|0>|0..0> + beta|1>|1..1> on n qubits, measures party 0 with
/// a = beta/alpha, b = 1 and compares to violation_ratio. Throws
/// std::runtime_error if mu vanishes on the state or the two ratios differ
/// by more than 1e-9 relative.
ViolationReport construct_violation(double alpha, double beta, int n, const Evaluator& mu, double eta);

struct SweepRecord {
    double eta;
    double a;
    double b;
    double x;
    double rhs;
    bool holds;
};

/// Cell-centre points (i + 1/2)/R, i = 0..R-1, of the open unit interval.
std::vector<double> sweep_grid(int resolution);

/// inequality_rhs on the R^3 grid for each eta; eta-major, then a, b, x.
std::vector<SweepRecord> sweep(std::span<const double> etas, int resolution);

/// Header "eta,a,b,x,rhs,holds"; 17 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

}  // namespace slocc
