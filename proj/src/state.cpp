#include "slocc/state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "slocc/kernels.hpp"

namespace slocc {

namespace {

std::size_t product_of(const std::vector<int>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                           [](std::size_t acc, int d) { return acc * static_cast<std::size_t>(d); });
}

void check_party(const PureState& state, int party) {
    if (party < 0 || party >= state.num_parties()) {
        throw std::invalid_argument("party index " + std::to_string(party) + " out of range");
    }
}

// Flat-index offsets contributed by `parties` for every joint index over
// them, joint index big-endian in the listed order.
std::vector<std::size_t> joint_offsets(const PureState& state, std::span<const int> parties) {
    std::vector<std::size_t> offsets{0};
    for (int p : parties) {
        const std::size_t stride = state.stride(p);
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * static_cast<std::size_t>(state.dim(p)));
        for (std::size_t base : offsets) {
            for (int i = 0; i < state.dim(p); ++i) next.push_back(base + static_cast<std::size_t>(i) * stride);
        }
        offsets = std::move(next);
    }
    return offsets;
}

int parse_count(std::string_view text) {
    int n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad integer argument '" + std::string(text) + "'");
    }
    return n;
}

}  // namespace

PureState::PureState(std::vector<int> dims, std::vector<Complex> amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
    if (dims_.empty()) throw std::invalid_argument("state needs at least one party");
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("local dimensions must be positive");
    }
    if (amps_.size() != product_of(dims_)) {
        throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                    " does not match product of dims " + std::to_string(product_of(dims_)));
    }
    for (const Complex& z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
    }
}

std::size_t PureState::stride(int party) const {
    std::size_t s = 1;
    for (std::size_t m = static_cast<std::size_t>(party) + 1; m < dims_.size(); ++m) s *= static_cast<std::size_t>(dims_[m]);
    return s;
}

bool PureState::all_qubits() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 2; });
}

double PureState::squared_norm() const noexcept {
    double s = 0.0;
    for (const Complex& z : amps_) s += std::norm(z);
    return s;
}

double PureState::norm() const noexcept { return std::sqrt(squared_norm()); }

bool PureState::is_normalized(double tol) const noexcept { return std::abs(squared_norm() - 1.0) <= tol; }

PureState PureState::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return scaled(1.0 / n);
}

PureState PureState::scaled(Complex factor) const {
    std::vector<Complex> out(amps_);
    for (Complex& z : out) z *= factor;
    return PureState(dims_, std::move(out));
}

PureState make_state(std::vector<int> dims, std::vector<Complex> amps, bool normalize) {
    PureState s(std::move(dims), std::move(amps));
    return normalize ? s.normalized() : s;
}

namespace states {

PureState ghz(int n) {
    if (n < 2) throw std::invalid_argument("ghz needs N >= 2");
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return PureState(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(amps));
}

PureState w(int n) {
    if (n < 2) throw std::invalid_argument("w needs N >= 2");
    std::vector<Complex> amps(std::size_t{1} << n);
    for (int j = 0; j < n; ++j) amps[std::size_t{1} << j] = 1.0 / std::sqrt(static_cast<double>(n));
    return PureState(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(amps));
}

PureState bell() { return ghz(2); }

PureState basis(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("empty basis bitstring");
    std::size_t k = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("basis bitstring must contain only 0 and 1");
        k = 2 * k + static_cast<std::size_t>(c - '0');
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[k] = 1.0;
    return PureState(std::vector<int>(bits.size(), 2), std::move(amps));
}

PureState uniform_product(int n) {
    if (n < 1) throw std::invalid_argument("uniform_product needs N >= 1");
    const std::size_t size = std::size_t{1} << n;
    std::vector<Complex> amps(size, Complex(1.0 / std::sqrt(static_cast<double>(size))));
    return PureState(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(amps));
}

PureState maximally_entangled(int d) {
    if (d < 2) throw std::invalid_argument("maximally entangled state needs d >= 2");
    const auto ud = static_cast<std::size_t>(d);
    std::vector<Complex> amps(ud * ud);
    for (std::size_t i = 0; i < ud; ++i) amps[i * ud + i] = 1.0 / std::sqrt(static_cast<double>(d));
    return PureState({d, d}, std::move(amps));
}

}  // namespace states

PureState standard_state(std::string_view name) {
    if (name == "bell") return states::bell();
    const auto open = name.find('(');
    if (open == std::string_view::npos || name.back() != ')') {
        throw std::invalid_argument("unknown state '" + std::string(name) + "'");
    }
    const std::string_view head = name.substr(0, open);
    const std::string_view arg = name.substr(open + 1, name.size() - open - 2);
    if (head == "basis") return states::basis(arg);
    const int n = parse_count(arg);
    if (head == "ghz") return states::ghz(n);
    if (head == "w") return states::w(n);
    if (head == "uniform_product") {
        if (n < 2) throw std::invalid_argument("uniform_product needs N >= 2");
        return states::uniform_product(n);
    }
    if (head == "maxent") return states::maximally_entangled(n);
    throw std::invalid_argument("unknown state '" + std::string(name) + "'");
}

PureState random_state(std::vector<int> dims, Seed seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(product_of(dims));
    for (Complex& z : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = Complex(re, im);
    }
    return PureState(std::move(dims), std::move(amps)).normalized();
}

Complex overlap(const PureState& a, const PureState& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("overlap of states with different dims");
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

PureState apply_at(const PureState& state, int party, const CMatrix& op) {
    check_party(state, party);
    const int d = state.dim(party);
    if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("operator on party " + std::to_string(party) + " must be " +
                                    std::to_string(d) + "x" + std::to_string(d));
    }
    const std::size_t stride = state.stride(party);
    const kernels::PartyLayout layout{state.size() / (static_cast<std::size_t>(d) * stride), d, stride};
    std::vector<Complex> out(state.size());
    kernels::apply_party_op(state.amps(), out, layout, op);
    return PureState(state.dims(), std::move(out));
}

PureState apply_local(const PureState& state, std::span<const CMatrix> ops) {
    if (static_cast<int>(ops.size()) != state.num_parties()) {
        throw std::invalid_argument("apply_local needs one operator per party");
    }
    PureState out = state;
    for (int p = 0; p < state.num_parties(); ++p) out = apply_at(out, p, ops[static_cast<std::size_t>(p)]);
    return out;
}

PureState permute_parties(const PureState& state, std::span<const int> perm) {
    const int n = state.num_parties();
    std::vector<int> seen(perm.begin(), perm.end());
    std::sort(seen.begin(), seen.end());
    if (static_cast<int>(perm.size()) != n || seen != complement(n, {})) {
        throw std::invalid_argument("permute_parties needs a permutation of all parties");
    }
    std::vector<int> dims(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) dims[j] = state.dim(perm[j]);
    const auto old_offsets = joint_offsets(state, perm);
    std::vector<Complex> amps(state.size());
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] = state[old_offsets[k]];
    return PureState(std::move(dims), std::move(amps));
}

std::size_t joint_dim(const PureState& state, std::span<const int> parties) {
    std::size_t d = 1;
    for (int p : parties) d *= static_cast<std::size_t>(state.dim(p));
    return d;
}

std::vector<int> complement(int num_parties, std::span<const int> parties) {
    std::vector<int> rest;
    for (int p = 0; p < num_parties; ++p) {
        if (std::find(parties.begin(), parties.end(), p) == parties.end()) rest.push_back(p);
    }
    return rest;
}

DensityMatrix partial_trace(const PureState& state, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("duplicate party in keep set");
    }
    for (int p : keep) check_party(state, p);
    if (keep.empty() || static_cast<int>(keep.size()) == state.num_parties()) {
        throw std::invalid_argument("keep set must be a nonempty proper subset of the parties");
    }
    const std::vector<int> traced = complement(state.num_parties(), keep);
    const auto rows = joint_offsets(state, keep);
    const auto cols = joint_offsets(state, traced);
    DensityMatrix rho{CMatrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()))};
    kernels::reduced_density(state.amps(), rows, cols, rho.entries);
    return rho;
}

CoefficientMatrix reshape_coefficient_matrix(const PureState& state, std::span<const int> left) {
    std::vector<int> sorted(left.begin(), left.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate party in bipartition");
    }
    for (int p : left) check_party(state, p);
    const std::vector<int> right = complement(state.num_parties(), left);
    const std::size_t dl = joint_dim(state, left);
    const std::size_t dr = joint_dim(state, right);
    if (left.empty() || dl != dr) {
        throw std::invalid_argument("bipartition dimensions differ (" + std::to_string(dl) + " vs " +
                                    std::to_string(dr) + "); the determinant of the larger side vanishes");
    }
    const auto rows = joint_offsets(state, left);
    const auto cols = joint_offsets(state, right);
    CoefficientMatrix x{CMatrix(static_cast<Eigen::Index>(dl), static_cast<Eigen::Index>(dr))};
    for (std::size_t i = 0; i < dl; ++i) {
        for (std::size_t l = 0; l < dr; ++l) {
            x.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) = state[rows[i] + cols[l]];
        }
    }
    return x;
}

}  // namespace slocc
