#include "slocc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slocc/invariants.hpp"
#include "slocc/linalg.hpp"
#include "slocc/monotone.hpp"
#include "slocc/state.hpp"
#include "slocc/state_io.hpp"
#include "slocc/verify.hpp"

namespace slocc::cli {

namespace {

constexpr const char* kIndexConvention =
    "State files are JSON: {\"dims\":[d1,...,dN], \"amps\":[[re,im],...]}.\n"
    "Index convention: amps[k] = a_{i1...iN} with k = sum_j i_j * prod_{m>j} d_m\n"
    "(big-endian, party 1 is the most significant digit).\n"
    "Invariant names (parties numbered from 1): tau, conc, b:i[,j], lmn, L, M, N,\n"
    "det:p[,q,...], gconc:p[,q,...].";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v + 0.0;
    return os.str();
}

std::string fmt_complex(Complex z) { return "[" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + "]"; }

double det_rho(const PureState& state, std::vector<int> keep) {
    return linalg::determinant(partial_trace(state, std::move(keep)).entries).real();
}

// --- compute ---------------------------------------------------------------

struct ComputeOptions {
    std::string state_file;
    std::string invariant;
    std::string output = "json";
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out) {
    PureState state = [&] {
        try {
            return read_state_file(opt.state_file);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    nlohmann::json report{{"invariant", opt.invariant}, {"dims", state.dims()}};
    std::ostringstream text;

    if (opt.invariant == "lmn") {
        if (!state.all_qubits() || state.num_parties() != 4) throw UsageError("lmn needs a 4-qubit state");
        const LuqueThibon v = luque_thibon(state);
        const double r12 = det_rho(state, {0, 1});
        const double r13 = det_rho(state, {0, 2});
        const double r14 = det_rho(state, {0, 3});
        report["degree"] = 4;
        report["L"] = complex_to_json(v.L);
        report["M"] = complex_to_json(v.M);
        report["N"] = complex_to_json(v.N);
        report["abs2"] = {{"L", std::norm(v.L)}, {"M", std::norm(v.M)}, {"N", std::norm(v.N)}};
        report["det_rho"] = {{"12", r12}, {"13", r13}, {"14", r14}};
        text << "L = " << fmt_complex(v.L) << "  |L|^2 = " << fmt_double(std::norm(v.L))
             << "  det rho12 = " << fmt_double(r12) << '\n'
             << "M = " << fmt_complex(v.M) << "  |M|^2 = " << fmt_double(std::norm(v.M))
             << "  det rho13 = " << fmt_double(r13) << '\n'
             << "N = " << fmt_complex(v.N) << "  |N|^2 = " << fmt_double(std::norm(v.N))
             << "  det rho14 = " << fmt_double(r14) << '\n'
             << "degree = 4\n";
    } else {
        Invariant inv = [&] {
            try {
                return make_invariant(opt.invariant, state.dims());
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        const Complex value = inv.eval(state);
        report["value"] = complex_to_json(value);
        report["degree"] = inv.degree;
        text << inv.name << " = " << fmt_complex(value) << "  (degree " << inv.degree << ")\n";
        const bool det_based = opt.invariant.rfind("det:", 0) == 0 || opt.invariant.rfind("gconc:", 0) == 0;
        if (det_based) {
            const auto colon = opt.invariant.find(':');
            const std::vector<int> left = parse_party_list(opt.invariant.substr(colon + 1), state.num_parties());
            const Complex nu = det_invariant(state, left);
            const double rho = det_rho(state, left);
            report["abs2_nu"] = std::norm(nu);
            report["det_rho"] = rho;
            text << "|nu|^2 = " << fmt_double(std::norm(nu)) << "  det rho = " << fmt_double(rho) << '\n';
        }
    }
    if (opt.output == "json") {
        out << report.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    int trials = 100;
    Seed seed = 42;
    double tol = 0.0;  // 0 selects each suite's default
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    using namespace slocc::verify;
    auto tol_or = [&](double fallback) { return opt.tol > 0.0 ? opt.tol : fallback; };
    const std::vector<int> q3{2, 2, 2};
    const std::vector<int> q4{2, 2, 2, 2};
    const std::vector<int> q2{2, 2};
    const std::vector<int> qt{3, 3};
    const bool all = opt.suite == "all";
    std::vector<SuiteReport> reports;

    if (all || opt.suite == "invariance") {
        const double tol = tol_or(kSlTol);
        const std::pair<const char*, std::vector<int>> cases[] = {
            {"tau", q3},   {"tau", q4},   {"b:3", q3},   {"b:1,2", q4}, {"b:1,3", q4}, {"b:1,4", q4},
            {"L", q4},     {"M", q4},     {"N", q4},     {"conc", q4},  {"det:1", q2}, {"det:1", qt},
            {"det:1,2", q4}, {"gconc:1", qt},
        };
        Seed s = opt.seed;
        for (const auto& [name, dims] : cases) reports.push_back(check_sl_invariance(name, dims, opt.trials, s++, tol));
    }
    if (all || opt.suite == "homogeneity") {
        const double tol = tol_or(kIdentityTol);
        const std::vector<double> lambdas{0.5, 2.0, 3.0};
        const std::pair<const char*, std::vector<int>> cases[] = {
            {"tau", q3}, {"conc", q4}, {"b:1,2", q4}, {"L", q4}, {"det:1", qt}, {"gconc:1", qt},
        };
        Seed s = opt.seed;
        for (const auto& [name, dims] : cases) {
            reports.push_back(check_homogeneity(name, dims, lambdas, opt.trials, s++, tol));
        }
    }
    if (all || opt.suite == "identities") {
        reports.push_back(check_identities(opt.trials, opt.seed, tol_or(kIdentityTol)));
    }
    if (all || opt.suite == "monotone") {
        const double tol = tol_or(1e-10);
        reports.push_back(check_monotone("tau", 4.0, q4, opt.trials, opt.seed, tol));
        reports.push_back(check_monotone("conc", 2.0, q4, opt.trials, opt.seed + 1, tol));
        reports.push_back(check_monotone("tau", 2.0, q3, opt.trials, opt.seed + 2, tol));
        reports.push_back(check_monotone("tau", 6.0, q4, opt.trials, opt.seed + 3, tol));
    }
    if (all || opt.suite == "rank") reports.push_back(check_rank(opt.seed));
    if (reports.empty()) throw UsageError("unknown suite '" + opt.suite + "'");

    bool pass = true;
    nlohmann::json j = nlohmann::json::array();
    for (const SuiteReport& r : reports) {
        pass = pass && r.pass();
        j.push_back(to_json(r));
    }
    out << nlohmann::json{{"pass", pass}, {"seed", opt.seed}, {"reports", j}}.dump(2) << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
}

// --- sweep -----------------------------------------------------------------

struct SweepOptions {
    std::vector<double> etas;
    int grid = 50;
    std::string out_file;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out) {
    for (double eta : opt.etas) {
        if (!(eta >= 0.0) || !std::isfinite(eta)) throw UsageError("eta values must be finite and >= 0");
    }
    if (opt.grid < 2) throw UsageError("--grid must be >= 2");
    const std::vector<SweepRecord> records = sweep(opt.etas, opt.grid);
    std::ofstream file(opt.out_file);
    if (!file) throw UsageError("cannot write '" + opt.out_file + "'");
    write_sweep_csv(file, records);
    file.flush();
    if (!file) throw UsageError("failed writing '" + opt.out_file + "'");

    const std::size_t per_eta = static_cast<std::size_t>(opt.grid) * opt.grid * opt.grid;
    for (std::size_t e = 0; e < opt.etas.size(); ++e) {
        std::size_t holds = 0;
        double max_rhs = -std::numeric_limits<double>::infinity();
        for (std::size_t k = e * per_eta; k < (e + 1) * per_eta; ++k) {
            holds += records[k].holds ? 1 : 0;
            max_rhs = std::max(max_rhs, records[k].rhs);
        }
        out << "eta=" << fmt_double(opt.etas[e]) << " points=" << per_eta << " holds=" << holds
            << " violations=" << per_eta - holds << " max_rhs=" << fmt_double(max_rhs) << '\n';
    }
    return kExitOk;
}

// --- violate ---------------------------------------------------------------

struct ViolateOptions {
    double eta = 6.0;
    double beta = 0.1;
    int n = 4;
};

int cmd_violate(const ViolateOptions& opt, std::ostream& out) {
    if (!(opt.eta > 0.0)) throw UsageError("--eta must be positive");
    if (!(opt.beta > 0.0 && opt.beta < 1.0 / std::sqrt(2.0))) throw UsageError("--beta must lie in (0, 1/sqrt(2))");
    if (opt.n < 2) throw UsageError("--n must be >= 2");
    const double alpha = std::sqrt(1.0 - opt.beta * opt.beta);
    const double eta = opt.eta;
    // tau_N^{eta/4} is homogeneous of degree eta and nonzero on the GHZ-branch family.
    const Evaluator mu = [eta](const PureState& s) { return std::pow(n_tangle(s), eta / 4.0); };
    const ViolationReport v = construct_violation(alpha, opt.beta, opt.n, mu, eta);
    out << nlohmann::json{{"eta", v.eta},
                          {"alpha", v.alpha},
                          {"beta", v.beta},
                          {"n", opt.n},
                          {"evaluator", "tau^(eta/4)"},
                          {"closed_form_ratio", v.ratio},
                          {"simulated_ratio", v.simulated},
                          {"violated", v.violated()}}
               .dump(2)
        << '\n';
    out << (v.violated() ? "VIOLATED" : "not violated") << ": mubar/mu0 = " << fmt_double(v.simulated) << '\n';
    return kExitOk;
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
    std::string state;
    int n = 2;
    int d = 2;
    std::vector<int> dims;
    Seed seed = 0;
    std::string out_file;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    PureState state = [&] {
        try {
            if (opt.state == "ghz") return states::ghz(opt.n);
            if (opt.state == "w") return states::w(opt.n);
            if (opt.state == "bell") return states::bell();
            if (opt.state == "maxent") return states::maximally_entangled(opt.d);
            if (opt.state == "random") {
                std::vector<int> dims = opt.dims.empty() ? std::vector<int>(static_cast<std::size_t>(opt.n), 2) : opt.dims;
                if (dims.empty()) throw std::invalid_argument("--n must be >= 1");
                return random_state(std::move(dims), opt.seed);
            }
            throw std::invalid_argument("unknown state '" + opt.state + "'");
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    try {
        write_state_file(opt.out_file, state);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << "wrote " << opt.out_file << " (" << state.size() << " amplitudes)\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial SLOCC invariants of pure multipartite states and numerical checks of their monotonicity",
                 "slocc"};
    app.footer(kIndexConvention);
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Evaluate an invariant on a state file");
    c->add_option("--state", compute.state_file, "State JSON file")->required();
    c->add_option("--invariant", compute.invariant, "Invariant name")->required();
    c->add_option("--output", compute.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->footer(kIndexConvention);

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Run randomized verification suites; exit 1 on failure");
    v->add_option("--suite", verify.suite, "all|invariance|homogeneity|identities|monotone|rank")
        ->check(CLI::IsMember({"all", "invariance", "homogeneity", "identities", "monotone", "rank"}));
    v->add_option("--trials", verify.trials, "Trials per suite")->check(CLI::PositiveNumber);
    v->add_option("--seed", verify.seed, "Root seed");
    v->add_option("--tol", verify.tol, "Override the suite tolerance")->check(CLI::PositiveNumber);

    SweepOptions sweep_opt;
    auto* s = app.add_subcommand("sweep", "Evaluate the monotonicity inequality on an (a, b, x) grid");
    s->add_option("--etas", sweep_opt.etas, "Comma-separated homogeneity degrees")->required()->delimiter(',');
    s->add_option("--grid", sweep_opt.grid, "Points per axis");
    s->add_option("--out", sweep_opt.out_file, "CSV output file")->required();

    ViolateOptions violate;
    auto* vi = app.add_subcommand("violate", "Run the explicit violating POVM for degree eta");
    vi->add_option("--eta", violate.eta, "Homogeneity degree")->required();
    vi->add_option("--beta", violate.beta, "Small branch amplitude, 0 < beta < 1/sqrt(2)");
    vi->add_option("--n", violate.n, "Number of qubits");

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Write a standard or random state file");
    g->add_option("--state", gen.state, "ghz|w|bell|maxent|random")->required();
    g->add_option("--n", gen.n, "Number of qubits");
    g->add_option("--d", gen.d, "Local dimension for maxent");
    g->add_option("--dims", gen.dims, "Comma-separated local dimensions for random")->delimiter(',');
    g->add_option("--seed", gen.seed, "Seed for random");
    g->add_option("--out", gen.out_file, "Output file")->required();
    g->footer(kIndexConvention);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c) return cmd_compute(compute, out);
        if (*v) return cmd_verify(verify, out);
        if (*s) return cmd_sweep(sweep_opt, out);
        if (*vi) return cmd_violate(violate, out);
        if (*g) return cmd_gen(gen, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace slocc::cli
