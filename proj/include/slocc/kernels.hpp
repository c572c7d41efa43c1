#pragma once

#include <cstddef>
#include <span>

#include "slocc/types.hpp"

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp. The OpenMP
// versions partition work into fixed chunks that do not depend on the
// thread count, so their output is identical for any OMP_NUM_THREADS.
namespace slocc::kernels {

/// Reductions are split into chunks of this many terms. Inputs no longer
/// than one chunk reduce in exactly the serial order.
inline constexpr std::size_t kReductionChunk = 4096;

/// Index layout for one party inside a flat amplitude vector:
/// flat = outer * (dim * stride) + local * stride + inner.
struct PartyLayout {
    std::size_t outer;
    int dim;
    std::size_t stride;
};

namespace serial {

void apply_party_op(std::span<const Complex> in, std::span<Complex> out, PartyLayout layout,
                    const CMatrix& op);
Complex bilinear_dot(std::span<const Complex> a, std::span<const Complex> b);
void reduced_density(std::span<const Complex> amps, std::span<const std::size_t> row_offsets,
                     std::span<const std::size_t> col_offsets, CMatrix& out);
/// rhs of the monotonicity inequality on the (a, b, x) cell-centre grid,
/// a-major then b then x.
void inequality_grid(double eta, int resolution, std::span<double> rhs_out);

}  // namespace serial

namespace omp {

void apply_party_op(std::span<const Complex> in, std::span<Complex> out, PartyLayout layout,
                    const CMatrix& op);
Complex bilinear_dot(std::span<const Complex> a, std::span<const Complex> b);
void reduced_density(std::span<const Complex> amps, std::span<const std::size_t> row_offsets,
                     std::span<const std::size_t> col_offsets, CMatrix& out);
void inequality_grid(double eta, int resolution, std::span<double> rhs_out);

}  // namespace omp

using omp::apply_party_op;
using omp::bilinear_dot;
using omp::inequality_grid;
using omp::reduced_density;

}  // namespace slocc::kernels
