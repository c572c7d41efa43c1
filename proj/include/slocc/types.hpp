#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace slocc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Seed for every randomized routine. Equal seeds give bit-identical output.
using Seed = std::uint64_t;

/// SplitMix64 finalizer. Used to derive independent per-trial seeds from a
/// root seed so that trial i can be replayed without running trials 0..i-1.
constexpr Seed derive_seed(Seed root, std::uint64_t stream) noexcept {
    Seed z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace slocc
