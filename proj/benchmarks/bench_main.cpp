#include <benchmark/benchmark.h>

#include "toda/bracket.hpp"
#include "toda/diagram.hpp"
#include "toda/random.hpp"
#include "toda/smith.hpp"

using namespace toda;

namespace {

Matrix random_matrix(Rng& rng, std::size_t n, Scalar bound) {
    std::uniform_int_distribution<Scalar> pick(-bound, bound);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
    return m;
}

Ring ring_for(int64_t code) { return code == 0 ? Ring::integers() : Ring::prime_field(Scalar(code)); }

std::vector<ChainMap> diagram(const Ring& R, std::size_t length, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_toda_diagram(R, rng, length, RandomShape{0, 3, rank, false});
}

}  // namespace

// Args: matrix size, ring (0 = Z, else p).
static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const Ring R = ring_for(state.range(1));
    Rng rng(1);
    Matrix m = reduce(R, random_matrix(rng, n, 3));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(R, m));
}
// Dense random integer matrices past size 8 overflow 64-bit entries.
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{4, 8}, {0}});
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{4, 8, 16, 32, 64}, {2, 3}});

// Args: diagram length n + 1, rank per degree.
static void BM_ExtendCube(benchmark::State& state) {
    const Ring F2 = Ring::prime_field(2);
    auto maps = diagram(F2, std::size_t(state.range(0)), std::size_t(state.range(1)), 7);
    auto r = rectify(TodaDiagramInput{maps, {}});
    if (!r.success) {
        state.SkipWithError("diagram did not strictify");
        return;
    }
    auto hat = strictify_strict(r.strict.maps).hat;
    for (auto _ : state) benchmark::DoNotOptimize(extend_cube(hat));
}
BENCHMARK(BM_ExtendCube)->ArgsProduct({{2, 3}, {1, 2}})->Unit(benchmark::kMillisecond);

// Args: rank per degree, ring (0 = Z, else p).
static void BM_TripleBracket(benchmark::State& state) {
    const Ring R = ring_for(state.range(1));
    auto m = diagram(R, 3, std::size_t(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(triple_bracket(m[0], m[1], m[2]));
}
BENCHMARK(BM_TripleBracket)->ArgsProduct({{1, 2, 3}, {0, 2, 3}})->Unit(benchmark::kMillisecond);

static void BM_MasseyOracle(benchmark::State& state) {
    const Ring R = ring_for(state.range(1));
    auto m = diagram(R, 3, std::size_t(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(massey_oracle(m[0], m[1], m[2]));
}
BENCHMARK(BM_MasseyOracle)->ArgsProduct({{1, 2, 3}, {0, 2, 3}})->Unit(benchmark::kMillisecond);

// Args: diagram length, ring (0 = Z, else p).
static void BM_Rectify(benchmark::State& state) {
    const Ring R = ring_for(state.range(1));
    auto m = diagram(R, std::size_t(state.range(0)), 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(rectify(TodaDiagramInput{m, {}}));
}
BENCHMARK(BM_Rectify)->ArgsProduct({{2, 3, 4}, {0, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
