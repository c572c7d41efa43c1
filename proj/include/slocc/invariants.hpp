#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/state.hpp"
#include "slocc/types.hpp"

namespace slocc {

/// Pauli matrices sigma_0..sigma_3 = (1, sigma_x, sigma_y, sigma_z).
const CMatrix& pauli(int mu);

/// Contraction metric for the B invariants.
inline constexpr std::array<int, 4> kMetricG{-1, 1, 0, 1};
/// Minkowski-like metric appearing in the N-tangle rewrite.
inline constexpr std::array<int, 4> kMetricEta{-1, 1, 1, 1};

/// Sign s in L = s (B_(1,3) - B_(1,4)) / 48 and cyclic, fixed by the
/// calibration test under the M/N convention of luque_thibon().
inline constexpr int kBToLmnSign = +1;
inline constexpr double kBToLmnScale = 1.0 / 48.0;

/// Guard for the brute-force N-tangle; work grows as 2^{2N+2}.
inline constexpr int kDirectTangleMaxQubits = 8;

/// Value with its homogeneity degree eta: mu(lambda psi) = lambda^eta mu(psi).
struct InvariantValue {
    Complex value;
    int degree;
};

/// <psi*|A psi> = sum_jk a_j A_jk a_k, no conjugation anywhere. One 2x2
/// operator per qubit.
Complex bilinear_form(const PureState& state, std::span<const CMatrix> ops);

/// Literal quadruple epsilon-sum for the N-tangle, 2 <= N <= 8. Oracle only.
double n_tangle_direct(const PureState& state);

/// N-tangle as |sum_mu eta_mu <psi*|sigma_2^{N-1} sigma_mu psi>^2|.
double n_tangle(const PureState& state);

/// Degree-4 B invariant with sigma_mu contracted at the given 0-based
/// positions and sigma_2 elsewhere. Odd N takes one position, even N two
/// distinct positions.
Complex b_invariant(const PureState& state, std::span<const int> positions);

/// <psi*|sigma_2^{(x) N} psi> for even N; |.|^2 is the N-tangle.
Complex n_concurrence(const PureState& state);

struct LuqueThibon {
    Complex L;
    Complex M;
    Complex N;
};

/// L is the determinant of the 4x4 array with rows (i3 i4) and columns
/// (i1 i2). M and N use qubit 2 exchanged with 3, resp. 4, with the sign
/// chosen so that L + M + N = 0.
LuqueThibon luque_thibon(const PureState& state);

/// nu = det X^dagger for an equal-dimension bipartition; degree d.
Complex det_invariant(const PureState& state, std::span<const int> left);

/// d |nu|^{2/d}: 1 on maximally entangled, 0 on product states.
double g_concurrence(const PureState& state, std::span<const int> left);

/// Named invariant usable by the harness and the CLI.
///
/// Names (party numbers 1-based): tau, conc, b:i or b:i,j, L, M, N,
/// det:p,q,..., gconc:p,q,...
struct Invariant {
    std::string name;
    int degree;
    /// True when the value is an absolute value (tau, gconc); such
    /// invariants are compared by modulus under SL maps.
    bool real_valued;
    std::function<Complex(const PureState&)> eval;
};

/// Throws std::invalid_argument for unknown names or names not applicable
/// to dims.
Invariant make_invariant(std::string_view name, const std::vector<int>& dims);

/// Parses "1,3" into 0-based party indices, checking 1 <= p <= num_parties.
std::vector<int> parse_party_list(std::string_view text, int num_parties);

}  // namespace slocc
