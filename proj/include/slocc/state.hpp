#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "slocc/types.hpp"

namespace slocc {

/// Pure state of an N-partite system with local dimensions d_1..d_N.
///
/// Amplitudes are stored flat in big-endian order: amps[k] = a_{i_1...i_N}
/// with k = sum_j i_j * prod_{m>j} d_m, so party 0 is the most significant
/// digit. Party indices in the library API are 0-based.
class PureState {
public:
    /// Throws std::invalid_argument on empty/non-positive dims, length
    /// mismatch or non-finite amplitudes.
    PureState(std::vector<int> dims, std::vector<Complex> amps);

    const std::vector<int>& dims() const noexcept { return dims_; }
    std::span<const Complex> amps() const noexcept { return amps_; }
    const Complex& operator[](std::size_t k) const { return amps_[k]; }

    int num_parties() const noexcept { return static_cast<int>(dims_.size()); }
    std::size_t size() const noexcept { return amps_.size(); }
    int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
    /// Flat-index step of one unit of party's local index.
    std::size_t stride(int party) const;
    bool all_qubits() const noexcept;

    double squared_norm() const noexcept;
    double norm() const noexcept;
    bool is_normalized(double tol = 1e-12) const noexcept;

    /// Throws std::invalid_argument on the zero vector.
    PureState normalized() const;
    PureState scaled(Complex factor) const;

private:
    std::vector<int> dims_;
    std::vector<Complex> amps_;
};

/// Hermitian reduced state of the kept parties; rows/columns follow the
/// big-endian joint index of the kept parties in ascending party order.
struct DensityMatrix {
    CMatrix entries;
    int dim() const noexcept { return static_cast<int>(entries.rows()); }
};

/// Reshaped amplitude matrix X^dagger with (X^dagger)_{i,l} = a_{i,l}:
/// row = joint index of the left parties, column = joint index of the rest.
struct CoefficientMatrix {
    CMatrix entries;
    int dim() const noexcept { return static_cast<int>(entries.rows()); }
};

PureState make_state(std::vector<int> dims, std::vector<Complex> amps, bool normalize = false);

namespace states {

PureState ghz(int n);
PureState w(int n);
PureState bell();
/// Computational basis state of qubits, e.g. "0101".
PureState basis(std::string_view bits);
/// |+>^{(x) n}.
PureState uniform_product(int n);
/// (sum_i |ii>)/sqrt(d) on a d x d system.
PureState maximally_entangled(int d);

}  // namespace states

/// Parses "ghz(N)", "w(N)", "bell", "basis(0101)", "uniform_product(N)" and
/// "maxent(d)". Throws std::invalid_argument on unknown names or N < 2.
PureState standard_state(std::string_view name);

/// Independent standard complex Gaussian amplitudes, normalized.
PureState random_state(std::vector<int> dims, Seed seed);

/// Unconjugated-left inner product <a|b>.
Complex overlap(const PureState& a, const PureState& b);

/// (O_1 (x) ... (x) O_N)|psi>, not renormalized.
PureState apply_local(const PureState& state, std::span<const CMatrix> ops);
/// Applies a single operator on one party, identity elsewhere.
PureState apply_at(const PureState& state, int party, const CMatrix& op);

/// rho_keep = tr_rest |psi><psi| by direct summation over the traced
/// indices. keep must be a nonempty proper subset of the parties.
DensityMatrix partial_trace(const PureState& state, std::vector<int> keep);

/// X^dagger for the bipartition left | complement. The left parties keep
/// the given order; the complement is in ascending order. Throws
/// std::invalid_argument unless both sides have equal total dimension.
CoefficientMatrix reshape_coefficient_matrix(const PureState& state, std::span<const int> left);

/// Relabels parties: party j of the result is party perm[j] of state.
PureState permute_parties(const PureState& state, std::span<const int> perm);

/// Joint dimension of the listed parties.
std::size_t joint_dim(const PureState& state, std::span<const int> parties);

/// Ascending complement of parties within 0..N-1.
std::vector<int> complement(int num_parties, std::span<const int> parties);

}  // namespace slocc
