#include "slocc/kernels.hpp"

#include <cassert>
#include <vector>

#include "slocc/monotone.hpp"

namespace slocc::kernels {

namespace {

// out[o, i, s] = sum_j op(i, j) in[o, j, s] for one (o, s) fibre.
inline void apply_fibre(const Complex* in, Complex* out, int dim, std::size_t stride, const CMatrix& op) {
    for (int i = 0; i < dim; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < dim; ++j) acc += op(i, j) * in[static_cast<std::size_t>(j) * stride];
        out[static_cast<std::size_t>(i) * stride] = acc;
    }
}

inline Complex dot_range(const Complex* a, const Complex* b, std::size_t begin, std::size_t end) {
    Complex acc = 0.0;
    for (std::size_t k = begin; k < end; ++k) acc += a[k] * b[k];
    return acc;
}

inline Complex density_entry(const Complex* amps, std::size_t r1, std::size_t r2,
                             std::span<const std::size_t> cols) {
    Complex acc = 0.0;
    for (std::size_t c : cols) acc += amps[r1 + c] * std::conj(amps[r2 + c]);
    return acc;
}

inline double grid_point(double eta, const std::vector<double>& g, std::size_t flat) {
    const std::size_t r = g.size();
    const std::size_t ix = flat % r;
    const std::size_t ib = (flat / r) % r;
    const std::size_t ia = flat / (r * r);
    return inequality_rhs(g[ia], g[ib], g[ix], eta);
}

}  // namespace

namespace serial {

void apply_party_op(std::span<const Complex> in, std::span<Complex> out, PartyLayout layout,
                    const CMatrix& op) {
    assert(in.size() == out.size());
    const std::size_t block = static_cast<std::size_t>(layout.dim) * layout.stride;
    for (std::size_t o = 0; o < layout.outer; ++o) {
        for (std::size_t s = 0; s < layout.stride; ++s) {
            const std::size_t base = o * block + s;
            apply_fibre(in.data() + base, out.data() + base, layout.dim, layout.stride, op);
        }
    }
}

Complex bilinear_dot(std::span<const Complex> a, std::span<const Complex> b) {
    assert(a.size() == b.size());
    return dot_range(a.data(), b.data(), 0, a.size());
}

void reduced_density(std::span<const Complex> amps, std::span<const std::size_t> row_offsets,
                     std::span<const std::size_t> col_offsets, CMatrix& out) {
    const auto n = static_cast<Eigen::Index>(row_offsets.size());
    out.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
            out(i, k) = density_entry(amps.data(), row_offsets[static_cast<std::size_t>(i)],
                                      row_offsets[static_cast<std::size_t>(k)], col_offsets);
        }
    }
}

void inequality_grid(double eta, int resolution, std::span<double> rhs_out) {
    const std::vector<double> g = sweep_grid(resolution);
    assert(rhs_out.size() == g.size() * g.size() * g.size());
    for (std::size_t k = 0; k < rhs_out.size(); ++k) rhs_out[k] = grid_point(eta, g, k);
}

}  // namespace serial

namespace omp {

void apply_party_op(std::span<const Complex> in, std::span<Complex> out, PartyLayout layout,
                    const CMatrix& op) {
    assert(in.size() == out.size());
    const std::size_t block = static_cast<std::size_t>(layout.dim) * layout.stride;
    const auto fibres = static_cast<std::ptrdiff_t>(layout.outer * layout.stride);
#pragma omp parallel for schedule(static) if (fibres >= 1024)
    for (std::ptrdiff_t f = 0; f < fibres; ++f) {
        const std::size_t o = static_cast<std::size_t>(f) / layout.stride;
        const std::size_t s = static_cast<std::size_t>(f) % layout.stride;
        const std::size_t base = o * block + s;
        apply_fibre(in.data() + base, out.data() + base, layout.dim, layout.stride, op);
    }
}

Complex bilinear_dot(std::span<const Complex> a, std::span<const Complex> b) {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
    if (chunks <= 1) return dot_range(a.data(), b.data(), 0, n);
    std::vector<Complex> partial(chunks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(n, begin + kReductionChunk);
        partial[static_cast<std::size_t>(c)] = dot_range(a.data(), b.data(), begin, end);
    }
    Complex acc = 0.0;
    for (const Complex& p : partial) acc += p;
    return acc;
}

void reduced_density(std::span<const Complex> amps, std::span<const std::size_t> row_offsets,
                     std::span<const std::size_t> col_offsets, CMatrix& out) {
    const auto n = static_cast<Eigen::Index>(row_offsets.size());
    out.resize(n, n);
    const std::ptrdiff_t entries = n * n;
    // Each entry is an independent serial sum, so the result is exact to the
    // serial reference.
#pragma omp parallel for schedule(static) if (entries * static_cast<std::ptrdiff_t>(col_offsets.size()) >= 4096)
    for (std::ptrdiff_t e = 0; e < entries; ++e) {
        const Eigen::Index i = e / n;
        const Eigen::Index k = e % n;
        out(i, k) = density_entry(amps.data(), row_offsets[static_cast<std::size_t>(i)],
                                  row_offsets[static_cast<std::size_t>(k)], col_offsets);
    }
}

void inequality_grid(double eta, int resolution, std::span<double> rhs_out) {
    const std::vector<double> g = sweep_grid(resolution);
    assert(rhs_out.size() == g.size() * g.size() * g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(rhs_out.size()); ++k) {
        rhs_out[static_cast<std::size_t>(k)] = grid_point(eta, g, static_cast<std::size_t>(k));
    }
}

}  // namespace omp

}  // namespace slocc::kernels
