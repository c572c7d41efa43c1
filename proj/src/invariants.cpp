#include "slocc/invariants.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "slocc/kernels.hpp"
#include "slocc/linalg.hpp"

namespace slocc {

namespace {

using namespace std::complex_literals;

void require_qubits(const PureState& state, const char* what) {
    if (!state.all_qubits()) throw std::invalid_argument(std::string(what) + " is defined for qubits only");
}

CMatrix make2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// sigma_2 on every party not listed in `skip`.
PureState apply_sigma2_except(const PureState& state, std::span<const int> skip) {
    PureState out = state;
    for (int p = 0; p < state.num_parties(); ++p) {
        bool skipped = false;
        for (int s : skip) skipped = skipped || s == p;
        if (!skipped) out = apply_at(out, p, pauli(2));
    }
    return out;
}

Complex unconjugated_dot(const PureState& a, const PureState& b) {
    return kernels::bilinear_dot(a.amps(), b.amps());
}

// epsilon_{01} = -epsilon_{10} = 1, zero on the diagonal.
int epsilon(int i, int j) { return i == j ? 0 : (i == 0 ? 1 : -1); }

int digit(std::size_t flat, int party, int n) { return static_cast<int>((flat >> (n - 1 - party)) & 1U); }

Complex lt_array_det(const PureState& state) {
    const std::array<int, 2> left{0, 1};
    // The array has rows (i3 i4) and columns (i1 i2), i.e. it is the transpose
    // of X^dagger; the determinant is taken on the array itself.
    const CMatrix array = reshape_coefficient_matrix(state, left).entries.transpose();
    return linalg::determinant(array);
}

}  // namespace

const CMatrix& pauli(int mu) {
    static const std::array<CMatrix, 4> sigma{
        make2(1.0, 0.0, 0.0, 1.0),
        make2(0.0, 1.0, 1.0, 0.0),
        make2(0.0, -1i, 1i, 0.0),
        make2(1.0, 0.0, 0.0, -1.0),
    };
    return sigma.at(static_cast<std::size_t>(mu));
}

Complex bilinear_form(const PureState& state, std::span<const CMatrix> ops) {
    require_qubits(state, "bilinear_form");
    if (static_cast<int>(ops.size()) != state.num_parties()) {
        throw std::invalid_argument("bilinear_form needs one operator per qubit");
    }
    return unconjugated_dot(state, apply_local(state, ops));
}

double n_tangle_direct(const PureState& state) {
    require_qubits(state, "n_tangle_direct");
    const int n = state.num_parties();
    if (n < 2 || n > kDirectTangleMaxQubits) {
        throw std::invalid_argument("n_tangle_direct supports 2 <= N <= " + std::to_string(kDirectTangleMaxQubits));
    }
    const std::size_t size = state.size();
    // Pairs (alpha, beta) with nonzero epsilon product over the first N-1
    // qubits; the same list serves for (gamma, delta).
    struct Pair {
        std::size_t first;
        std::size_t second;
        int weight;
    };
    std::vector<Pair> pairs;
    for (std::size_t alpha = 0; alpha < size; ++alpha) {
        for (std::size_t beta = 0; beta < size; ++beta) {
            int w = 1;
            for (int q = 0; q + 1 < n && w != 0; ++q) w *= epsilon(digit(alpha, q, n), digit(beta, q, n));
            if (w != 0) pairs.push_back({alpha, beta, w});
        }
    }
    Complex sum = 0.0;
    const int last = n - 1;
    for (const Pair& ab : pairs) {
        const Complex ab_amp = static_cast<double>(ab.weight) * state[ab.first] * state[ab.second];
        for (const Pair& gd : pairs) {
            const int w = epsilon(digit(ab.first, last, n), digit(gd.first, last, n)) *
                          epsilon(digit(ab.second, last, n), digit(gd.second, last, n));
            if (w == 0) continue;
            sum += static_cast<double>(w * gd.weight) * ab_amp * state[gd.first] * state[gd.second];
        }
    }
    return 2.0 * std::abs(sum);
}

double n_tangle(const PureState& state) {
    require_qubits(state, "n_tangle");
    const int n = state.num_parties();
    if (n < 2) throw std::invalid_argument("n_tangle needs N >= 2");
    const std::array<int, 1> last{n - 1};
    const PureState base = apply_sigma2_except(state, last);
    Complex sum = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        const Complex form = unconjugated_dot(state, apply_at(base, n - 1, pauli(mu)));
        sum += static_cast<double>(kMetricEta[static_cast<std::size_t>(mu)]) * form * form;
    }
    return std::abs(sum);
}

Complex b_invariant(const PureState& state, std::span<const int> positions) {
    require_qubits(state, "b_invariant");
    const int n = state.num_parties();
    const std::size_t expected = (n % 2 == 1) ? 1 : 2;
    if (positions.size() != expected) {
        throw std::invalid_argument(n % 2 == 1 ? "odd N takes exactly one contraction position"
                                               : "even N takes exactly two contraction positions");
    }
    for (int p : positions) {
        if (p < 0 || p >= n) throw std::invalid_argument("contraction position out of range");
    }
    if (expected == 2 && positions[0] == positions[1]) {
        throw std::invalid_argument("contraction positions must be distinct");
    }
    const PureState base = apply_sigma2_except(state, positions);
    Complex sum = 0.0;
    if (expected == 1) {
        for (int mu = 0; mu < 4; ++mu) {
            const int g = kMetricG[static_cast<std::size_t>(mu)];
            if (g == 0) continue;
            const Complex form = unconjugated_dot(state, apply_at(base, positions[0], pauli(mu)));
            sum += static_cast<double>(g) * form * form;
        }
        return sum;
    }
    for (int mu = 0; mu < 4; ++mu) {
        const int gm = kMetricG[static_cast<std::size_t>(mu)];
        if (gm == 0) continue;
        const PureState partial = apply_at(base, positions[0], pauli(mu));
        for (int nu = 0; nu < 4; ++nu) {
            const int gn = kMetricG[static_cast<std::size_t>(nu)];
            if (gn == 0) continue;
            const Complex form = unconjugated_dot(state, apply_at(partial, positions[1], pauli(nu)));
            sum += static_cast<double>(gm * gn) * form * form;
        }
    }
    return sum;
}

Complex n_concurrence(const PureState& state) {
    require_qubits(state, "n_concurrence");
    if (state.num_parties() % 2 != 0) throw std::invalid_argument("n_concurrence needs an even number of qubits");
    return unconjugated_dot(state, apply_sigma2_except(state, {}));
}

LuqueThibon luque_thibon(const PureState& state) {
    require_qubits(state, "luque_thibon");
    if (state.num_parties() != 4) throw std::invalid_argument("luque_thibon needs exactly 4 qubits");
    const std::array<int, 4> swap23{0, 2, 1, 3};
    const std::array<int, 4> swap24{0, 3, 2, 1};
    return LuqueThibon{
        lt_array_det(state),
        -lt_array_det(permute_parties(state, swap23)),
        -lt_array_det(permute_parties(state, swap24)),
    };
}

Complex det_invariant(const PureState& state, std::span<const int> left) {
    return linalg::determinant(reshape_coefficient_matrix(state, left).entries);
}

double g_concurrence(const PureState& state, std::span<const int> left) {
    const double d = static_cast<double>(joint_dim(state, left));
    return d * std::pow(std::abs(det_invariant(state, left)), 2.0 / d);
}

std::vector<int> parse_party_list(std::string_view text, int num_parties) {
    std::vector<int> parties;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string token(text.substr(start, comma - start));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size()) {
            throw std::invalid_argument("bad party list '" + std::string(text) + "'");
        }
        if (value < 1 || value > num_parties) {
            throw std::invalid_argument("party " + token + " out of range 1.." + std::to_string(num_parties));
        }
        parties.push_back(value - 1);
        start = comma + 1;
    }
    return parties;
}

Invariant make_invariant(std::string_view name, const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    bool qubits = true;
    for (int d : dims) qubits = qubits && d == 2;
    auto need_qubits = [&](std::string_view what) {
        if (!qubits) throw std::invalid_argument(std::string(what) + " needs a qubit state");
    };
    const std::string key(name);

    if (name == "tau") {
        need_qubits(name);
        if (n < 2) throw std::invalid_argument("tau needs N >= 2");
        return {key, 4, true, [](const PureState& s) { return Complex(n_tangle(s)); }};
    }
    if (name == "conc") {
        need_qubits(name);
        if (n % 2 != 0) throw std::invalid_argument("conc needs an even number of qubits");
        return {key, 2, false, [](const PureState& s) { return n_concurrence(s); }};
    }
    if (name == "L" || name == "M" || name == "N") {
        need_qubits(name);
        if (n != 4) throw std::invalid_argument("L, M, N need exactly 4 qubits");
        const char which = name.front();
        return {key, 4, false, [which](const PureState& s) {
                    const LuqueThibon lmn = luque_thibon(s);
                    return which == 'L' ? lmn.L : (which == 'M' ? lmn.M : lmn.N);
                }};
    }
    const auto colon = name.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("unknown invariant '" + key + "'");
    const std::string_view head = name.substr(0, colon);
    std::vector<int> parties = parse_party_list(name.substr(colon + 1), n);

    if (head == "b") {
        need_qubits(name);
        const std::size_t expected = (n % 2 == 1) ? 1 : 2;
        if (parties.size() != expected || (expected == 2 && parties[0] == parties[1])) {
            throw std::invalid_argument("b invariant needs one position for odd N and two distinct for even N");
        }
        return {key, 4, false, [parties](const PureState& s) { return b_invariant(s, parties); }};
    }
    if (head == "det" || head == "gconc") {
        std::size_t dl = 1;
        for (int p : parties) dl *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
        std::size_t total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        if (dl * dl != total) throw std::invalid_argument("'" + key + "' needs an equal-dimension bipartition");
        for (std::size_t i = 0; i < parties.size(); ++i) {
            for (std::size_t j = i + 1; j < parties.size(); ++j) {
                if (parties[i] == parties[j]) throw std::invalid_argument("duplicate party in '" + key + "'");
            }
        }
        if (head == "det") {
            return {key, static_cast<int>(dl), false,
                    [parties](const PureState& s) { return det_invariant(s, parties); }};
        }
        return {key, 2, true, [parties](const PureState& s) { return Complex(g_concurrence(s, parties)); }};
    }
    throw std::invalid_argument("unknown invariant '" + key + "'");
}

}  // namespace slocc
