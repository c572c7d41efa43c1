#include "slocc/povm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "slocc/linalg.hpp"

namespace slocc {

namespace {

CMatrix gaussian_matrix(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

void check_unitary(const CMatrix& u, const char* name) {
    if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument(std::string(name) + " must be 2x2");
    if (linalg::unitarity_residual(u) > 1e-10) throw std::invalid_argument(std::string(name) + " is not unitary");
}

}  // namespace

CMatrix random_sl(int d, Seed seed) {
    if (d < 1) throw std::invalid_argument("random_sl needs d >= 1");
    std::mt19937_64 rng(seed);
    for (;;) {
        CMatrix m = gaussian_matrix(d, rng);
        const Complex det = linalg::determinant(m);
        if (std::abs(det) < kSlConditioningGuard) continue;
        return m * std::exp(-std::log(det) / static_cast<double>(d));
    }
}

CMatrix random_unitary(int d, Seed seed) {
    if (d < 1) throw std::invalid_argument("random_unitary needs d >= 1");
    std::mt19937_64 rng(seed);
    const CMatrix z = gaussian_matrix(d, rng);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix& r = qr.matrixQR();
    for (int i = 0; i < d; ++i) {
        const Complex diag = r(i, i);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(i) *= diag / mag;
    }
    return q;
}

CMatrix PovmPair::D1() const {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = a;
    d(1, 1) = b;
    return d;
}

CMatrix PovmPair::D2() const {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = std::sqrt(1.0 - a * a);
    d(1, 1) = std::sqrt(1.0 - b * b);
    return d;
}

double PovmPair::completeness_residual() const {
    const CMatrix sum = A1.adjoint() * A1 + A2.adjoint() * A2;
    return (sum - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
}

PovmPair make_povm(double a, double b, CMatrix U1, CMatrix U2, CMatrix V) {
    if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
        throw std::invalid_argument("POVM parameters a, b must lie in [0, 1]");
    }
    check_unitary(U1, "U1");
    check_unitary(U2, "U2");
    check_unitary(V, "V");
    PovmPair povm{CMatrix(), CMatrix(), a, b, std::move(U1), std::move(U2), std::move(V)};
    povm.A1 = povm.U1 * povm.D1() * povm.V;
    povm.A2 = povm.U2 * povm.D2() * povm.V;
    return povm;
}

PovmPair make_povm(double a, double b) {
    const CMatrix id = CMatrix::Identity(2, 2);
    return make_povm(a, b, id, id, id);
}

std::array<PovmOutcome, 2> apply_povm(const PureState& state, int party, const PovmPair& povm) {
    if (party < 0 || party >= state.num_parties()) throw std::invalid_argument("POVM party index out of range");
    if (state.dim(party) != 2) throw std::invalid_argument("POVM party must be a qubit");
    if (!state.is_normalized(1e-10)) throw std::invalid_argument("apply_povm needs a normalized state");
    std::array<PovmOutcome, 2> outcomes;
    const std::array<const CMatrix*, 2> elements{&povm.A1, &povm.A2};
    for (std::size_t j = 0; j < 2; ++j) {
        PureState raw = apply_at(state, party, *elements[j]);
        const double p = raw.squared_norm();
        outcomes[j].probability = p;
        if (p >= kZeroProbability) outcomes[j].post = raw.scaled(1.0 / std::sqrt(p));
    }
    return outcomes;
}

PovmAverage average_after_povm(const Evaluator& mu, double eta, const PureState& state, int party,
                               const PovmPair& povm) {
    if (!(eta > 0.0)) throw std::invalid_argument("homogeneity degree must be positive");
    PovmAverage avg{mu(state), 0.0};
    for (const PovmOutcome& o : apply_povm(state, party, povm)) {
        if (o.post) avg.mubar += o.probability * mu(*o.post);
    }
    return avg;
}

double branch_weight(const PureState& state, int party, const CMatrix& V) {
    const PureState rotated = apply_at(state, party, V);
    const std::size_t stride = rotated.stride(party);
    double x = 0.0;
    for (std::size_t k = 0; k < rotated.size(); ++k) {
        if ((k / stride) % 2 == 0) x += std::norm(rotated[k]);
    }
    return x;
}

}  // namespace slocc
