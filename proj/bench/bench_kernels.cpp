#include "kstab/lattice.hpp"
#include "kstab/zariski.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kstab;

namespace {

// |det| = 29 * 30 * 66 = 57420.
const lattice::GramLattice kLattice{{2, 1, 0, 0}, {1, -14, 0, 0}, {0, 0, 30, 0}, {0, 0, 0, -66}};

const lattice::QuadraticCondition kEllipse{3, -2, 5, 7, -11, -200000, lattice::Comparison::less};
const lattice::Box kBox{{-600, 600}, {-600, 600}};

std::vector<Vec> dp4_classes(std::size_t n) {
    const auto s = intersect::dp4_surface();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> w(0, 8);
    std::bernoulli_distribution use(0.3);
    std::vector<Vec> out;
    while (out.size() < n) {
        Vec d = zero_vec(s.rank());
        for (const auto& c : s.negative_curves)
            if (use(rng)) d = d + Rational(w(rng)) * c.value;
        d = d - Rational(w(rng) + 1) * s.canonical;
        out.push_back(d);
    }
    return out;
}

void BM_isotropic_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice::isotropic_elements(kLattice));
}
void BM_isotropic_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice::isotropic_elements_serial(kLattice));
}
void BM_search_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice::integer_search_quadratic(kEllipse, kBox));
}
void BM_search_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice::integer_search_quadratic_serial(kEllipse, kBox));
}
void BM_zariski_parallel(benchmark::State& state) {
    const auto s = intersect::dp4_surface();
    const auto classes = dp4_classes(200);
    for (auto _ : state) benchmark::DoNotOptimize(zariski::zariski_decompose_batch(s, classes));
}
void BM_zariski_serial(benchmark::State& state) {
    const auto s = intersect::dp4_surface();
    const auto classes = dp4_classes(200);
    for (auto _ : state) benchmark::DoNotOptimize(zariski::zariski_decompose_batch_serial(s, classes));
}

}  // namespace

BENCHMARK(BM_isotropic_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isotropic_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zariski_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zariski_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
