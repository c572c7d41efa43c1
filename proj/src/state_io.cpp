#include "slocc/state_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace slocc {

namespace {

double finite_number(const nlohmann::json& v, const char* what) {
    if (!v.is_number()) throw std::invalid_argument(std::string(what) + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument(std::string(what) + " is not finite");
    return d;
}

}  // namespace

PureState state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("amps")) {
        throw std::invalid_argument("state file needs \"dims\" and \"amps\"");
    }
    const auto& jd = j.at("dims");
    const auto& ja = j.at("amps");
    if (!jd.is_array() || !ja.is_array()) throw std::invalid_argument("\"dims\" and \"amps\" must be arrays");
    std::vector<int> dims;
    for (const auto& d : jd) {
        if (!d.is_number_integer() || d.get<long long>() < 1) {
            throw std::invalid_argument("dims must be positive integers");
        }
        dims.push_back(d.get<int>());
    }
    std::vector<Complex> amps;
    amps.reserve(ja.size());
    for (const auto& a : ja) {
        if (!a.is_array() || a.size() != 2) throw std::invalid_argument("each amplitude must be [re, im]");
        amps.emplace_back(finite_number(a[0], "re"), finite_number(a[1], "im"));
    }
    return PureState(std::move(dims), std::move(amps));
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real() + 0.0, z.imag() + 0.0}); }

nlohmann::json state_to_json(const PureState& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& z : state.amps()) amps.push_back(complex_to_json(z));
    return {{"dims", state.dims()}, {"amps", std::move(amps)}};
}

PureState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

void write_state_file(const std::string& path, const PureState& state) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write state file '" + path + "'");
    out << state_to_json(state).dump() << '\n';
    if (!out) throw std::invalid_argument("failed writing state file '" + path + "'");
}

}  // namespace slocc
