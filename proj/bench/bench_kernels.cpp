#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "slocc/invariants.hpp"
#include "slocc/kernels.hpp"
#include "slocc/povm.hpp"
#include "slocc/state.hpp"

namespace {

using namespace slocc;

std::vector<Complex> random_amps(int n, Seed seed) {
    const PureState s = random_state(std::vector<int>(static_cast<std::size_t>(n), 2), seed);
    return {s.amps().begin(), s.amps().end()};
}

template <auto Kernel>
void apply_party_op(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const std::vector<Complex> in = random_amps(n, 1);
    std::vector<Complex> out(in.size());
    // Middle party: outer and inner loops both non-trivial.
    const int party = n / 2;
    const std::size_t stride = std::size_t{1} << (n - party - 1);
    const kernels::PartyLayout layout{std::size_t{1} << party, 2, stride};
    const CMatrix op = random_sl2(2);
    for (auto _ : st) {
        Kernel(in, out, layout, op);
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(in.size()));
}

template <auto Kernel>
void bilinear_dot(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const std::vector<Complex> a = random_amps(n, 3), b = random_amps(n, 4);
    for (auto _ : st) benchmark::DoNotOptimize(Kernel(a, b));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(a.size()));
}

template <auto Kernel>
void reduced_density(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const int keep = static_cast<int>(st.range(1));
    const std::vector<Complex> amps = random_amps(n, 5);
    std::vector<std::size_t> rows(std::size_t{1} << keep), cols(std::size_t{1} << (n - keep));
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i << (n - keep);
    CMatrix out;
    for (auto _ : st) {
        Kernel(amps, rows, cols, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Kernel>
void inequality_grid(benchmark::State& st) {
    const int r = static_cast<int>(st.range(0));
    std::vector<double> out(static_cast<std::size_t>(r) * r * r);
    for (auto _ : st) {
        Kernel(4.5, r, out);
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(out.size()));
}

void n_tangle_sum(benchmark::State& st) {
    const PureState s = random_state(std::vector<int>(static_cast<std::size_t>(st.range(0)), 2), 6);
    for (auto _ : st) benchmark::DoNotOptimize(n_tangle(s));
}

void n_tangle_brute(benchmark::State& st) {
    const PureState s = random_state(std::vector<int>(static_cast<std::size_t>(st.range(0)), 2), 6);
    for (auto _ : st) benchmark::DoNotOptimize(n_tangle_direct(s));
}

}  // namespace

BENCHMARK(apply_party_op<slocc::kernels::serial::apply_party_op>)->Name("apply_party_op/serial")->DenseRange(12, 20, 4);
BENCHMARK(apply_party_op<slocc::kernels::omp::apply_party_op>)->Name("apply_party_op/omp")->DenseRange(12, 20, 4);
BENCHMARK(bilinear_dot<slocc::kernels::serial::bilinear_dot>)->Name("bilinear_dot/serial")->DenseRange(12, 20, 4);
BENCHMARK(bilinear_dot<slocc::kernels::omp::bilinear_dot>)->Name("bilinear_dot/omp")->DenseRange(12, 20, 4);
BENCHMARK(reduced_density<slocc::kernels::serial::reduced_density>)
    ->Name("reduced_density/serial")
    ->Args({12, 4})
    ->Args({16, 6});
BENCHMARK(reduced_density<slocc::kernels::omp::reduced_density>)
    ->Name("reduced_density/omp")
    ->Args({12, 4})
    ->Args({16, 6});
BENCHMARK(inequality_grid<slocc::kernels::serial::inequality_grid>)->Name("inequality_grid/serial")->Arg(25)->Arg(50);
BENCHMARK(inequality_grid<slocc::kernels::omp::inequality_grid>)->Name("inequality_grid/omp")->Arg(25)->Arg(50);
BENCHMARK(n_tangle_sum)->DenseRange(4, 12, 4);
BENCHMARK(n_tangle_brute)->DenseRange(4, 8, 4);

BENCHMARK_MAIN();
