#include "slocc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "slocc/invariants.hpp"
#include "slocc/linalg.hpp"
#include "slocc/monotone.hpp"
#include "slocc/povm.hpp"
#include "slocc/state.hpp"

namespace slocc::verify {

namespace {

constexpr double kTiny = 1e-300;

struct TrialResult {
    std::vector<TrialFailure> failures;
    std::map<std::string, double> worst;

    // Records `error` under `metric` and fails when it exceeds tol.
    void expect_within(Seed seed, const std::string& metric, double error, double observed, double expected,
                       double tol) {
        auto [it, inserted] = worst.try_emplace(metric, error);
        if (!inserted) it->second = std::max(it->second, error);
        if (!(error <= tol)) failures.push_back({seed, metric, observed, expected, tol});
    }
};

double rel_err(Complex observed, Complex expected) {
    return std::abs(observed - expected) / std::max(std::abs(expected), kTiny);
}

double mixed_err(double observed, double expected) {
    return std::abs(observed - expected) / std::max(1.0, std::abs(expected));
}

// Runs trials in parallel and merges results in trial order, so the report
// does not depend on scheduling.
void run_trials(SuiteReport& report, int trials, Seed root, const std::function<void(Seed, TrialResult&)>& body) {
    std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const Seed seed = derive_seed(root, static_cast<std::uint64_t>(t));
        TrialResult& r = results[static_cast<std::size_t>(t)];
        try {
            body(seed, r);
        } catch (const std::exception& e) {
            r.failures.push_back({seed, std::string("exception: ") + e.what(), 0.0, 0.0, 0.0});
        }
    }
    report.trials += trials;
    for (TrialResult& r : results) {
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
        for (const auto& [k, v] : r.worst) {
            auto [it, inserted] = report.metrics.try_emplace(k, v);
            if (!inserted) it->second = std::max(it->second, v);
        }
    }
}

std::vector<int> qubits(int n) { return std::vector<int>(static_cast<std::size_t>(n), 2); }

Complex compare_value(const Invariant& inv, Complex v) { return inv.real_valued ? Complex(std::abs(v)) : v; }

}  // namespace

SuiteReport check_sl_invariance(std::string_view invariant, const std::vector<int>& dims, int trials, Seed seed,
                                double tol, int maps_per_state) {
    const Invariant inv = make_invariant(invariant, dims);
    SuiteReport report{"invariance:" + inv.name, 0, {}, {}};
    run_trials(report, trials, seed, [&](Seed ts, TrialResult& r) {
        const PureState psi = random_state(dims, derive_seed(ts, 0));
        const Complex before = compare_value(inv, inv.eval(psi));
        for (int m = 0; m < maps_per_state; ++m) {
            std::vector<CMatrix> ops;
            for (std::size_t p = 0; p < dims.size(); ++p) {
                ops.push_back(random_sl(dims[p], derive_seed(ts, 1 + static_cast<std::uint64_t>(m) * dims.size() + p)));
            }
            const Complex after = compare_value(inv, inv.eval(apply_local(psi, ops)));
            r.expect_within(ts, "max_rel_drift", rel_err(after, before), std::abs(after), std::abs(before), tol);
        }
    });
    report.trials *= maps_per_state;
    return report;
}

SuiteReport check_homogeneity(std::string_view invariant, const std::vector<int>& dims,
                              std::span<const double> lambdas, int trials, Seed seed, double tol) {
    const Invariant inv = make_invariant(invariant, dims);
    SuiteReport report{"homogeneity:" + inv.name, 0, {}, {}};
    report.metrics["degree"] = inv.degree;
    run_trials(report, trials, seed, [&](Seed ts, TrialResult& r) {
        const PureState psi = random_state(dims, derive_seed(ts, 0));
        const Complex v = inv.eval(psi);
        for (double lambda : lambdas) {
            if (!(lambda > 0.0)) throw std::invalid_argument("homogeneity needs positive lambda");
            const Complex scaled = inv.eval(psi.scaled(lambda));
            const Complex expected = std::pow(lambda, inv.degree) * v;
            r.expect_within(ts, "max_rel_err", rel_err(scaled, expected), std::abs(scaled), std::abs(expected), tol);
        }
    });
    // Observed factor |value(lambda psi) / value(psi)| for each lambda on one state.
    const PureState probe = random_state(dims, derive_seed(seed, 0xfac7));
    const double base = std::abs(inv.eval(probe));
    for (double lambda : lambdas) {
        if (lambda > 0.0 && base > 0.0) {
            report.metrics["factor@" + (std::ostringstream() << lambda).str()] = std::abs(inv.eval(probe.scaled(lambda))) / base;
        }
    }
    return report;
}

SuiteReport check_identities(int trials, Seed seed, double tol) {
    SuiteReport report{"identities", 0, {}, {}};

    // Fixtures with known values.
    struct Fixture {
        const char* name;
        PureState state;
        double tau;
    };
    const Fixture fixtures[] = {
        {"tau3(ghz)", states::ghz(3), 1.0},
        {"tau3(w)", states::w(3), 0.0},
        {"tau4(ghz)", states::ghz(4), 1.0},
    };
    for (const Fixture& f : fixtures) {
        const double direct = n_tangle_direct(f.state);
        const double fast = n_tangle(f.state);
        for (double v : {direct, fast}) {
            if (!(std::abs(v - f.tau) <= tol)) report.failures.push_back({seed, f.name, v, f.tau, tol});
        }
    }

    const std::array<int, 2> left12{0, 1};
    const std::array<int, 2> left13{0, 2};
    const std::array<int, 2> left14{0, 3};
    const std::array<int, 1> left1{0};

    // Sign of L against (B_(1,3) - B_(1,4))/48, read off one state.
    {
        const PureState psi = random_state(qubits(4), derive_seed(seed, 0xca1));
        const std::array<int, 2> p13{0, 2}, p14{0, 3};
        const Complex ratio =
            luque_thibon(psi).L / ((b_invariant(psi, p13) - b_invariant(psi, p14)) * kBToLmnScale);
        const double s = ratio.real() >= 0.0 ? 1.0 : -1.0;
        report.metrics["b_to_lmn_sign"] = s;
        if (s != kBToLmnSign || std::abs(ratio - s) > tol) {
            report.failures.push_back({seed, "b_to_lmn_sign calibration", ratio.real(), kBToLmnSign, tol});
        }
    }

    run_trials(report, trials, seed, [&](Seed ts, TrialResult& r) {
        // Fast N-tangle against the literal epsilon sum.
        for (int n = 2; n <= 6; ++n) {
            const PureState psi = random_state(qubits(n), derive_seed(ts, static_cast<std::uint64_t>(n)));
            const double direct = n_tangle_direct(psi);
            const double fast = n_tangle(psi);
            r.expect_within(ts, "oracle_tangle_err", std::abs(fast - direct) / std::max(1.0, direct), fast, direct,
                            tol);
        }
        for (int n : {2, 4, 6}) {
            const PureState psi = random_state(qubits(n), derive_seed(ts, 10 + static_cast<std::uint64_t>(n)));
            const double c2 = std::norm(n_concurrence(psi));
            const double tau = n_tangle(psi);
            r.expect_within(ts, "tau_vs_conc2_err", mixed_err(tau, c2), tau, c2, tol);
        }
        for (int n : {3, 5}) {
            const PureState psi = random_state(qubits(n), derive_seed(ts, 20 + static_cast<std::uint64_t>(n)));
            const std::array<int, 1> last{n - 1};
            const double b = std::abs(b_invariant(psi, last));
            const double tau = n_tangle(psi);
            r.expect_within(ts, "tau_vs_b_err", mixed_err(tau, b), tau, b, tol);
        }

        const PureState psi4 = random_state(qubits(4), derive_seed(ts, 30));
        const LuqueThibon lmn = luque_thibon(psi4);
        const std::array<std::pair<Complex, std::span<const int>>, 3> lt{{
            {lmn.L, left12},
            {lmn.M, left13},
            {lmn.N, left14},
        }};
        const char* lt_names[] = {"abs2_L_vs_det_rho12_err", "abs2_M_vs_det_rho13_err", "abs2_N_vs_det_rho14_err"};
        for (std::size_t i = 0; i < lt.size(); ++i) {
            const std::vector<int> keep(lt[i].second.begin(), lt[i].second.end());
            const double det_rho = linalg::determinant(partial_trace(psi4, keep).entries).real();
            const double abs2 = std::norm(lt[i].first);
            r.expect_within(ts, lt_names[i], rel_err(abs2, det_rho), abs2, det_rho, tol);
        }
        const double sum = std::abs(lmn.L + lmn.M + lmn.N);
        r.expect_within(ts, "abs_L_plus_M_plus_N", sum, sum, 0.0, kStructuralTol);

        const std::array<int, 2> p12{0, 1}, p13{0, 2}, p14{0, 3};
        const Complex b12 = b_invariant(psi4, p12);
        const Complex b13 = b_invariant(psi4, p13);
        const Complex b14 = b_invariant(psi4, p14);
        const double s = kBToLmnSign * kBToLmnScale;
        r.expect_within(ts, "b_to_L_err", rel_err(lmn.L, s * (b13 - b14)), std::abs(lmn.L), std::abs(s * (b13 - b14)),
                        tol);
        r.expect_within(ts, "b_to_M_err", rel_err(lmn.M, s * (b14 - b12)), std::abs(lmn.M), std::abs(s * (b14 - b12)),
                        tol);
        r.expect_within(ts, "b_to_N_err", rel_err(lmn.N, s * (b12 - b13)), std::abs(lmn.N), std::abs(s * (b12 - b13)),
                        tol);

        // rho_left = X^dagger X entrywise, qubits and qutrits.
        for (const auto& [dims, left] : {std::pair{qubits(4), std::vector<int>{0, 1}},
                                         std::pair{qubits(4), std::vector<int>{0, 2}},
                                         std::pair{std::vector<int>{3, 3}, std::vector<int>{0}}}) {
            const PureState psi = random_state(dims, derive_seed(ts, 40 + static_cast<std::uint64_t>(left.back())));
            const CMatrix xd = reshape_coefficient_matrix(psi, left).entries;
            const CMatrix rho = partial_trace(psi, left).entries;
            const double err = (rho - xd * xd.adjoint()).cwiseAbs().maxCoeff();
            r.expect_within(ts, "rho_vs_XdX_entrywise", err, err, 0.0, kStructuralTol);
        }

        // |nu|^2 = det rho on d x d bipartitions, d = 2, 3, 4.
        for (const auto& [dims, left] : {std::pair{qubits(2), std::vector<int>{0}},
                                         std::pair{std::vector<int>{3, 3}, std::vector<int>{0}},
                                         std::pair{qubits(4), std::vector<int>{0, 1}}}) {
            const PureState psi = random_state(dims, derive_seed(ts, 50 + dims.size() + static_cast<std::uint64_t>(dims[0])));
            const double abs2 = std::norm(det_invariant(psi, left));
            const double det_rho = linalg::determinant(partial_trace(psi, left).entries).real();
            r.expect_within(ts, "abs2_nu_vs_det_rho_err", rel_err(abs2, det_rho), abs2, det_rho, tol);
        }

        // Two qubits: (2|nu|)^2 = 4 det rho_1.
        {
            const PureState psi = random_state(qubits(2), derive_seed(ts, 60));
            const double c = 2.0 * std::abs(det_invariant(psi, left1));
            const double linear = 4.0 * linalg::determinant(partial_trace(psi, {0}).entries).real();
            r.expect_within(ts, "concurrence2_vs_4det_rho1_err", mixed_err(c * c, linear), c * c, linear, tol);
        }

        // Complementary reduced states share their spectrum.
        {
            const PureState psi = random_state({2, 3, 2}, derive_seed(ts, 70));
            Eigen::VectorXd small = linalg::hermitian_eigenvalues(partial_trace(psi, {1}).entries);
            Eigen::VectorXd big = linalg::hermitian_eigenvalues(partial_trace(psi, {0, 2}).entries);
            std::vector<double> a(small.data(), small.data() + small.size());
            std::vector<double> b(big.data(), big.data() + big.size());
            // The larger side carries extra zero eigenvalues.
            std::sort(b.begin(), b.end(), std::greater<>());
            std::sort(a.begin(), a.end(), std::greater<>());
            double err = 0.0;
            for (std::size_t i = 0; i < b.size(); ++i) err = std::max(err, std::abs(b[i] - (i < a.size() ? a[i] : 0.0)));
            r.expect_within(ts, "schmidt_spectrum_err", err, err, 0.0, tol);
            const double floor = std::min(small.minCoeff(), big.minCoeff());
            r.expect_within(ts, "psd_floor_violation", std::max(0.0, -floor), floor, 0.0, tol);
        }
    });
    return report;
}

SuiteReport check_monotone(std::string_view invariant, double eta, const std::vector<int>& dims, int trials,
                           Seed seed, double tol) {
    if (!(eta > 0.0)) throw std::invalid_argument("homogeneity degree must be positive");
    const Invariant inv = make_invariant(invariant, dims);
    const double power = eta / inv.degree;
    const Evaluator mu = [inv, power](const PureState& s) { return std::pow(std::abs(inv.eval(s)), power); };
    std::ostringstream label;
    label << "monotone:" << inv.name << "^(" << eta << "/" << inv.degree << ")";
    SuiteReport report{label.str(), 0, {}, {}};
    report.metrics["eta"] = eta;

    if (eta > 4.0) {
        double beta = 0.1;
        for (int k = 1; k < 7 && violation_ratio(std::sqrt(1.0 - beta * beta), beta, eta) <= 1.0; ++k) beta /= 10.0;
        const double alpha = std::sqrt(1.0 - beta * beta);
        report.trials = 1;
        report.metrics["beta"] = beta;
        try {
            const ViolationReport v = construct_violation(alpha, beta, static_cast<int>(dims.size()), mu, eta);
            report.metrics["ratio"] = v.ratio;
            report.metrics["simulated"] = v.simulated;
            if (!v.violated()) report.failures.push_back({seed, "no violation for eta > 4", v.simulated, 1.0, 0.0});
        } catch (const std::exception& e) {
            report.failures.push_back({seed, std::string("violation construction failed: ") + e.what(), 0, 0, 0});
        }
        return report;
    }

    run_trials(report, trials, seed, [&](Seed ts, TrialResult& r) {
        std::mt19937_64 rng(derive_seed(ts, 0));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const PureState psi = random_state(dims, derive_seed(ts, 1));
        const int party = static_cast<int>(rng() % dims.size());
        const double a = unit(rng);
        const double b = unit(rng);
        const CMatrix V = random_unitary2(derive_seed(ts, 4));
        const PovmPair povm = make_povm(a, b, random_unitary2(derive_seed(ts, 2)), random_unitary2(derive_seed(ts, 3)), V);
        const PovmAverage avg = average_after_povm(mu, eta, psi, party, povm);
        const double excess = avg.mubar - avg.mu0;
        r.expect_within(ts, "max_excess", std::max(excess, 0.0), avg.mubar, avg.mu0, tol);
        const double x = branch_weight(psi, party, V);
        const double scalar = inequality_rhs(a, b, x, eta) * avg.mu0;
        r.expect_within(ts, "scalar_form_err", std::abs(avg.mubar - scalar), avg.mubar, scalar, tol);
    });
    return report;
}

SuiteReport check_rank(Seed seed) {
    SuiteReport report{"rank", 0, {}, {}};
    constexpr int kSamples = 100;
    CMatrix b_triple(kSamples, 3);
    CMatrix lmn(kSamples, 3);
    CMatrix b_three(kSamples, 3);
    for (int t = 0; t < kSamples; ++t) {
        const Seed ts = derive_seed(seed, static_cast<std::uint64_t>(t));
        const PureState psi4 = random_state(qubits(4), derive_seed(ts, 0));
        for (int j = 1; j <= 3; ++j) {
            const std::array<int, 2> pos{0, j};
            b_triple(t, j - 1) = b_invariant(psi4, pos);
        }
        const LuqueThibon v = luque_thibon(psi4);
        lmn.row(t) << v.L, v.M, v.N;
        const PureState psi3 = random_state(qubits(3), derive_seed(ts, 1));
        for (int j = 0; j < 3; ++j) {
            const std::array<int, 1> pos{j};
            b_three(t, j) = b_invariant(psi3, pos);
        }
    }
    report.trials = kSamples;
    auto dimension = [](int n) { return ((1 << (n - 1)) + (n % 2 == 0 ? 1 : -1)) / 3; };
    const struct {
        const char* name;
        const CMatrix& m;
        int expected;
    } cases[] = {
        {"rank_b_triple", b_triple, dimension(4)},
        {"rank_lmn", lmn, dimension(4) - 1},
        {"rank_n3_basis", b_three, dimension(3)},
    };
    for (const auto& c : cases) {
        const int rank = linalg::numerical_rank(c.m, kRankThreshold);
        report.metrics[c.name] = rank;
        if (rank != c.expected) report.failures.push_back({seed, c.name, double(rank), double(c.expected), 0.0});
    }
    return report;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const TrialFailure& f : report.failures) {
        failures.push_back({{"seed", f.seed},
                            {"description", f.description},
                            {"observed", f.observed},
                            {"expected", f.expected},
                            {"tolerance", f.tolerance}});
    }
    return {{"suite", report.suite},
            {"trials", report.trials},
            {"pass", report.pass()},
            {"failures", std::move(failures)},
            {"metrics", report.metrics}};
}

}  // namespace slocc::verify
