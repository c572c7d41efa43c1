#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slocc/invariants.hpp"
#include "slocc/linalg.hpp"
#include "slocc/monotone.hpp"
#include "slocc/povm.hpp"

namespace slocc {
namespace {

std::vector<int> qubits(int n) { return std::vector<int>(static_cast<std::size_t>(n), 2); }

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(RandomSl, UnitDeterminantAndDeterminism) {
    for (Seed seed = 0; seed < 50; ++seed) {
        const CMatrix g = random_sl2(seed);
        EXPECT_LT(std::abs(linalg::determinant(g) - Complex(1.0)), 1e-12);
        EXPECT_EQ(g, random_sl2(seed));
        EXPECT_LT(std::abs(linalg::determinant(g * random_sl2(seed + 1000)) - Complex(1.0)), 1e-10);
    }
    for (int d : {1, 3, 4}) {
        EXPECT_LT(std::abs(linalg::determinant(random_sl(d, 5)) - Complex(1.0)), 1e-12) << d;
    }
    EXPECT_NE(random_sl2(1), random_sl2(2));
    EXPECT_THROW(random_sl(0, 1), std::invalid_argument);
}

TEST(RandomUnitary, UnitaryWithUnimodularDeterminant) {
    for (Seed seed = 0; seed < 50; ++seed) {
        const CMatrix u = random_unitary2(seed);
        EXPECT_LE(linalg::unitarity_residual(u), 1e-12);
        EXPECT_NEAR(std::abs(linalg::determinant(u)), 1.0, 1e-12);
        const PureState s = random_state(qubits(3), seed);
        EXPECT_NEAR(apply_at(s, 1, u).norm(), 1.0, 1e-12);
    }
    EXPECT_LE(linalg::unitarity_residual(random_unitary(4, 3)), 1e-12);
    EXPECT_THROW(random_unitary(0, 1), std::invalid_argument);
}

TEST(RandomUnitary, HaarFirstMoment) {
    // E|U_00|^2 = 1/2 for Haar 2x2 unitaries.
    const int samples = 20000;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) sum += std::norm(random_unitary2(static_cast<Seed>(i))(0, 0));
    EXPECT_NEAR(sum / samples, 0.5, 0.01);
}

TEST(MakePovm, UnitaryDegenerateCase) {
    const CMatrix id = CMatrix::Identity(2, 2);
    const CMatrix v = random_unitary2(4);
    const PovmPair p = make_povm(1.0, 1.0, id, id, v);
    EXPECT_LT(max_abs(p.A1 - v), 1e-15);
    EXPECT_EQ(max_abs(p.A2), 0.0);
}

TEST(MakePovm, ProjectiveBoundary) {
    const PovmPair p = make_povm(1.0, 0.0);
    EXPECT_EQ(p.D1(), (CMatrix(2, 2) << 1, 0, 0, 0).finished());
    EXPECT_EQ(p.D2(), (CMatrix(2, 2) << 0, 0, 0, 1).finished());
}

TEST(MakePovm, CompletenessOnRandomFactors) {
    for (Seed seed = 0; seed < 100; ++seed) {
        const double a = static_cast<double>(seed % 10) / 9.0;
        const double b = static_cast<double>((seed * 7) % 11) / 10.0;
        const PovmPair p = make_povm(a, b, random_unitary2(derive_seed(seed, 1)), random_unitary2(derive_seed(seed, 2)),
                                     random_unitary2(derive_seed(seed, 3)));
        EXPECT_LE(p.completeness_residual(), 1e-12);
        EXPECT_LT(max_abs(p.A1 - p.U1 * p.D1() * p.V), 1e-15);
    }
}

TEST(MakePovm, Errors) {
    const CMatrix id = CMatrix::Identity(2, 2);
    EXPECT_THROW(make_povm(-0.1, 0.5), std::invalid_argument);
    EXPECT_THROW(make_povm(0.5, 1.1), std::invalid_argument);
    EXPECT_THROW(make_povm(std::nan(""), 0.5), std::invalid_argument);
    EXPECT_THROW(make_povm(0.5, 0.5, 2.0 * id, id, id), std::invalid_argument);
    EXPECT_THROW(make_povm(0.5, 0.5, id, id, random_sl2(1)), std::invalid_argument);
    EXPECT_THROW(make_povm(0.5, 0.5, id, CMatrix::Identity(3, 3), id), std::invalid_argument);
}

TEST(ApplyPovm, UnitaryCaseIsDeterministic) {
    const CMatrix id = CMatrix::Identity(2, 2);
    const CMatrix v = random_unitary2(11);
    const PureState s = random_state(qubits(3), 2);
    const auto out = apply_povm(s, 2, make_povm(1.0, 1.0, id, id, v));
    EXPECT_NEAR(out[0].probability, 1.0, 1e-12);
    ASSERT_TRUE(out[0].post.has_value());
    EXPECT_LT(std::abs(overlap(*out[0].post, apply_at(s, 2, v)) - Complex(1.0)), 1e-12);
    EXPECT_LT(out[1].probability, kZeroProbability);
    EXPECT_FALSE(out[1].post.has_value());
}

TEST(ApplyPovm, ProjectiveOnBell) {
    const auto out = apply_povm(states::bell(), 0, make_povm(1.0, 0.0));
    EXPECT_NEAR(out[0].probability, 0.5, 1e-15);
    EXPECT_NEAR(out[1].probability, 0.5, 1e-15);
    ASSERT_TRUE(out[0].post && out[1].post);
    EXPECT_NEAR(std::abs(overlap(*out[0].post, states::basis("00"))), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(overlap(*out[1].post, states::basis("11"))), 1.0, 1e-15);
}

TEST(ApplyPovm, ProbabilitiesSumToOne) {
    for (Seed seed = 0; seed < 100; ++seed) {
        const PureState s = random_state(qubits(4), seed);
        const PovmPair p = make_povm(0.3 + 0.005 * static_cast<double>(seed), 0.8, random_unitary2(seed),
                                     random_unitary2(seed + 1), random_unitary2(seed + 2));
        const int party = static_cast<int>(seed % 4);
        const auto out = apply_povm(s, party, p);
        EXPECT_NEAR(out[0].probability + out[1].probability, 1.0, 1e-12);
        for (const auto& o : out) {
            ASSERT_TRUE(o.post.has_value());
            EXPECT_TRUE(o.post->is_normalized(1e-12));
        }
    }
}

TEST(ApplyPovm, Errors) {
    const PovmPair p = make_povm(0.5, 0.5);
    EXPECT_THROW(apply_povm(states::bell(), 2, p), std::invalid_argument);
    EXPECT_THROW(apply_povm(states::bell(), -1, p), std::invalid_argument);
    EXPECT_THROW(apply_povm(states::maximally_entangled(3), 0, p), std::invalid_argument);
    EXPECT_THROW(apply_povm(states::bell().scaled(2.0), 0, p), std::invalid_argument);
}

const Evaluator kTau = [](const PureState& s) { return n_tangle(s); };

TEST(AveragePovm, UnitaryDegenerateKeepsValue) {
    const CMatrix id = CMatrix::Identity(2, 2);
    for (Seed seed = 0; seed < 20; ++seed) {
        const PureState s = random_state(qubits(4), seed);
        const PovmPair p = make_povm(1.0, 1.0, random_unitary2(seed), id, random_unitary2(seed + 50));
        const PovmAverage avg = average_after_povm(kTau, 4.0, s, 1, p);
        EXPECT_NEAR(avg.mubar, avg.mu0, 1e-10);
    }
}

TEST(AveragePovm, GhzFourDoesNotIncrease) {
    const PovmAverage avg = average_after_povm(kTau, 4.0, states::ghz(4), 0, make_povm(0.6, 0.6));
    EXPECT_NEAR(avg.mu0, 1.0, 1e-14);
    EXPECT_LE(avg.mubar, avg.mu0 + 1e-10);
}

TEST(AveragePovm, MatchesScalarInequality) {
    for (Seed seed = 0; seed < 50; ++seed) {
        const PureState s = random_state(qubits(4), seed);
        const double a = 0.05 + 0.018 * static_cast<double>(seed);
        const double b = 0.93 - 0.011 * static_cast<double>(seed);
        const PovmPair p = make_povm(a, b, random_unitary2(derive_seed(seed, 1)), random_unitary2(derive_seed(seed, 2)),
                                     random_unitary2(derive_seed(seed, 3)));
        const int party = static_cast<int>(seed % 4);
        const PovmAverage avg = average_after_povm(kTau, 4.0, s, party, p);
        const double x = branch_weight(s, party, p.V);
        EXPECT_NEAR(avg.mubar, inequality_rhs(a, b, x, 4.0) * avg.mu0, 1e-10);
        EXPECT_NEAR(avg.mubar, oracle::rhs_unfactored(a, b, x, 4.0) * avg.mu0, 1e-10);
    }
}

TEST(AveragePovm, PowerEvaluatorMatchesScalarInequality) {
    const double eta = 6.0;
    const Evaluator mu = [](const PureState& s) { return std::pow(n_tangle(s), 1.5); };
    for (Seed seed = 0; seed < 20; ++seed) {
        const PureState s = random_state(qubits(3), seed);
        const PovmPair p = make_povm(0.4, 0.7, random_unitary2(seed), random_unitary2(seed + 1), random_unitary2(seed + 2));
        const PovmAverage avg = average_after_povm(mu, eta, s, 0, p);
        const double x = branch_weight(s, 0, p.V);
        EXPECT_NEAR(avg.mubar, inequality_rhs(0.4, 0.7, x, eta) * avg.mu0, 1e-10);
    }
}

TEST(AveragePovm, DiagonalFactorScalesByDeterminantPower) {
    const std::array<int, 2> p12{0, 1};
    for (Seed seed = 0; seed < 20; ++seed) {
        const PureState s = random_state(qubits(4), seed);
        const PovmPair p = make_povm(0.35, 0.8, CMatrix::Identity(2, 2), CMatrix::Identity(2, 2), random_unitary2(seed));
        const int party = static_cast<int>(seed % 4);
        const PureState rotated = apply_at(s, party, p.V);
        for (const CMatrix& d : {p.D1(), p.D2()}) {
            const Complex det = linalg::determinant(CMatrix(d * p.V));
            const PureState moved = apply_at(rotated, party, d);
            EXPECT_NEAR(n_tangle(moved), std::pow(std::abs(det), 2.0) * n_tangle(s), 1e-10);
            EXPECT_LT(std::abs(luque_thibon(moved).L - det * det * luque_thibon(s).L), 1e-10);
            EXPECT_LT(std::abs(b_invariant(moved, p12) - det * det * b_invariant(s, p12)), 1e-10);
            EXPECT_LT(std::abs(n_concurrence(moved) - det * n_concurrence(s)), 1e-10);
        }
    }
}

TEST(AveragePovm, Errors) {
    EXPECT_THROW(average_after_povm(kTau, 0.0, states::ghz(4), 0, make_povm(0.5, 0.5)), std::invalid_argument);
    EXPECT_THROW(average_after_povm(kTau, 4.0, states::ghz(4), 4, make_povm(0.5, 0.5)), std::invalid_argument);
}

TEST(BranchWeight, BasisStatesAndRotation) {
    const CMatrix id = CMatrix::Identity(2, 2);
    EXPECT_EQ(branch_weight(states::basis("010"), 1, id), 0.0);
    EXPECT_EQ(branch_weight(states::basis("010"), 0, id), 1.0);
    EXPECT_NEAR(branch_weight(states::ghz(3), 2, id), 0.5, 1e-15);
    const CMatrix x = pauli(1);
    EXPECT_EQ(branch_weight(states::basis("010"), 1, x), 1.0);
}

}  // namespace
}  // namespace slocc
