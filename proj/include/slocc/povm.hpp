#pragma once

#include <array>
#include <functional>
#include <optional>

#include "slocc/state.hpp"
#include "slocc/types.hpp"

namespace slocc {

/// Raw Gaussian samples with |det| below this are redrawn before rescaling.
inline constexpr double kSlConditioningGuard = 0.1;
/// Outcomes less likely than this are dropped from averages.
inline constexpr double kZeroProbability = 1e-14;

/// Complex Gaussian d x d matrix rescaled to determinant 1.
CMatrix random_sl(int d, Seed seed);
inline CMatrix random_sl2(Seed seed) { return random_sl(2, seed); }

/// Haar unitary from QR of a Gaussian matrix with the phases of R's
/// diagonal moved into Q.
CMatrix random_unitary(int d, Seed seed);
inline CMatrix random_unitary2(Seed seed) { return random_unitary(2, seed); }

/// Two-outcome qubit POVM A_j = U_j D_j V with D_1 = diag(a, b) and
/// D_2 = diag(sqrt(1-a^2), sqrt(1-b^2)). The factorization is kept.
struct PovmPair {
    CMatrix A1;
    CMatrix A2;
    double a;
    double b;
    CMatrix U1;
    CMatrix U2;
    CMatrix V;

    CMatrix D1() const;
    CMatrix D2() const;
    double completeness_residual() const;
};

PovmPair make_povm(double a, double b, CMatrix U1, CMatrix U2, CMatrix V);
/// Diagonal POVM with identity unitary factors.
PovmPair make_povm(double a, double b);

struct PovmOutcome {
    double probability;
    /// Normalized post-measurement state, empty when probability < 1e-14.
    std::optional<PureState> post;
};

std::array<PovmOutcome, 2> apply_povm(const PureState& state, int party, const PovmPair& povm);

/// Real-valued entanglement function evaluated on a state.
using Evaluator = std::function<double(const PureState&)>;

struct PovmAverage {
    double mu0;
    double mubar;
};

/// mu0 = mu(psi) and mubar = sum_j p_j mu(post_j) over normalized posts.
PovmAverage average_after_povm(const Evaluator& mu, double eta, const PureState& state, int party,
                               const PovmPair& povm);

/// x = <psi_0|psi_0> where V|psi> = |0>_k|psi_0> + |1>_k|psi_1>.
double branch_weight(const PureState& state, int party, const CMatrix& V);

}  // namespace slocc
