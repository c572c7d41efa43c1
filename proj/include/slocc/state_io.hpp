#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "slocc/state.hpp"

namespace slocc {

/// State file: {"dims":[d1,...,dN], "amps":[[re,im],...]}, amps in flat
/// big-endian order. Throws std::invalid_argument on malformed input.
PureState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const PureState& state);

PureState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const PureState& state);

/// [re, im]
nlohmann::json complex_to_json(Complex z);

}  // namespace slocc
