// Serial reference kernels against their OpenMP counterparts.
//
//   ./powsum_bench --benchmark_filter=Modular

#include <benchmark/benchmark.h>

#include <random>

#include "powsum/elimination.hpp"
#include "powsum/secant.hpp"
#include "powsum/witness.hpp"

using namespace powsum;

namespace {

Matrix<Integer> binomial_terracini(std::size_t n) {
    const auto t = secant::terracini_matrix(witness::binomial_set(n).forms, 3).transposed();
    Matrix<Integer> m(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) m(i, j) = t(i, j).get_num();
    return m;
}

Matrix<std::uint64_t> random_residues(std::size_t rows, std::size_t cols, const PrimeField& f) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
    Matrix<std::uint64_t> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

template <exactla::Backend B>
void Bareiss(benchmark::State& state) {
    const auto input = binomial_terracini(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto m = input;
        benchmark::DoNotOptimize(exactla::bareiss_forward(m, B));
    }
}

template <exactla::Backend B>
void Modular(benchmark::State& state) {
    const PrimeField f;
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto input = random_residues(n, n, f);
    for (auto _ : state) {
        auto m = input;
        benchmark::DoNotOptimize(exactla::modular_rref(m, f, B));
    }
}

}  // namespace

BENCHMARK(Bareiss<exactla::Backend::serial>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(Bareiss<exactla::Backend::parallel>)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(Modular<exactla::Backend::serial>)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(Modular<exactla::Backend::parallel>)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
