#include "slocc/monotone.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "slocc/kernels.hpp"

namespace slocc {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

double complement(double v) { return std::sqrt((1.0 - v) * (1.0 + v)); }

}  // namespace

double f_eta(double alpha, double beta, double x, double eta) {
    if (!in_unit(alpha) || !in_unit(beta) || !in_unit(x) || !(eta >= 0.0)) {
        throw std::domain_error("f_eta needs alpha, beta, x in [0, 1] and eta >= 0");
    }
    const double denom = x * alpha * alpha + (1.0 - x) * beta * beta;
    if (eta == 0.0) return denom;
    const double ab = alpha * beta;
    if (ab == 0.0) return 0.0;
    return ab * std::pow(ab / denom, eta / 2.0 - 1.0);
}

double inequality_rhs(double a, double b, double x, double eta) {
    if ((a == 0.0 && b == 0.0) || (a == 1.0 && b == 1.0)) {
        throw std::domain_error("inequality is undefined at a = b = 0 and a = b = 1");
    }
    if (!in_unit(a) || !in_unit(b)) throw std::domain_error("a, b must lie in [0, 1]");
    return f_eta(a, b, x, eta) + f_eta(complement(a), complement(b), x, eta);
}

double convexity_gap(double alpha, double beta, double x, double eta) {
    if (!(eta > 0.0 && eta < 4.0)) throw std::domain_error("convexity_gap needs 0 < eta < 4");
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
        throw std::domain_error("convexity_gap needs alpha, beta in (0, 1)");
    }
    const double t = eta / 4.0;
    return (1.0 - t) * f_eta(alpha, beta, x, 0.0) + t * f_eta(alpha, beta, x, 4.0) - f_eta(alpha, beta, x, eta);
}

double violation_ratio(double alpha, double beta, double eta) {
    if (!(alpha > beta && beta > 0.0)) throw std::domain_error("violation family needs alpha > beta > 0");
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
        throw std::domain_error("violation family needs alpha^2 + beta^2 = 1");
    }
    if (!(eta > 0.0)) throw std::domain_error("homogeneity degree must be positive");
    return std::pow(2.0, 1.0 - eta / 2.0) * std::pow(beta, 2.0 - eta / 2.0) * std::pow(alpha, -eta / 2.0);
}

ViolationReport construct_violation(double alpha, double beta, int n, const Evaluator& mu, double eta) {
    const double ratio = violation_ratio(alpha, beta, eta);
    if (n < 2) throw std::invalid_argument("violation state needs N >= 2");
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = alpha;
    amps.back() = beta;
    const PureState phi(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(amps));

    const PovmAverage avg = average_after_povm(mu, eta, phi, 0, make_povm(beta / alpha, 1.0));
    if (!(avg.mu0 > 0.0)) {
        throw std::runtime_error("evaluator vanishes on the violation state; no witness from this family");
    }
    ViolationReport report{eta, alpha, beta, ratio, avg.mubar / avg.mu0};
    if (std::abs(report.simulated - ratio) > 1e-9 * std::abs(ratio)) {
        throw std::runtime_error("simulated ratio " + std::to_string(report.simulated) +
                                 " disagrees with closed form " + std::to_string(ratio));
    }
    return report;
}

std::vector<double> sweep_grid(int resolution) {
    if (resolution < 2) throw std::invalid_argument("sweep resolution must be >= 2");
    std::vector<double> g(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) g[static_cast<std::size_t>(i)] = (i + 0.5) / resolution;
    return g;
}

std::vector<SweepRecord> sweep(std::span<const double> etas, int resolution) {
    const std::vector<double> g = sweep_grid(resolution);
    const std::size_t r = g.size();
    const std::size_t per_eta = r * r * r;
    std::vector<SweepRecord> records;
    records.reserve(etas.size() * per_eta);
    std::vector<double> rhs(per_eta);
    for (double eta : etas) {
        kernels::inequality_grid(eta, resolution, rhs);
        for (std::size_t k = 0; k < per_eta; ++k) {
            const double v = rhs[k];
            records.push_back({eta, g[k / (r * r)], g[(k / r) % r], g[k % r], v, v <= 1.0 + kHoldsSlack});
        }
    }
    return records;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "eta,a,b,x,rhs,holds\n";
    for (const SweepRecord& r : records) {
        out << r.eta << ',' << r.a << ',' << r.b << ',' << r.x << ',' << r.rhs << ',' << (r.holds ? "true" : "false")
            << '\n';
    }
    out.precision(old_precision);
}

}  // namespace slocc
