#include <benchmark/benchmark.h>

#include "carnot/gg_model.hpp"
#include "carnot/sym258.hpp"
#include "carnot/witt.hpp"

using namespace carnot;

static void BM_WittDimension(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Integer l = witt_dimension(2, i);
        benchmark::DoNotOptimize(l);
    }
}
BENCHMARK(BM_WittDimension)->Arg(10)->Arg(20)->Arg(40);

static void BM_HallBasis(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HallBasis b(2, r);
        benchmark::DoNotOptimize(b.size());
    }
}
BENCHMARK(BM_HallBasis)->Arg(4)->Arg(6)->Arg(8);

static void BM_LieBracket(benchmark::State& state) {
    const auto model = symmetric_model();
    const VectorField& x1 = model.frame.field(1);
    const VectorField x0 = symmetry_field().field;
    for (auto _ : state) {
        VectorField b = lie_bracket(x0, x1);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_LieBracket);

static void BM_GGFrame(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Frame f = gg_frame(r);
        benchmark::DoNotOptimize(f.size());
    }
}
BENCHMARK(BM_GGFrame)->Arg(4)->Arg(5)->Arg(6);

static void BM_VerifyFreeNilpotent(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Frame f = gg_frame(r);
    for (auto _ : state) {
        auto report = verify_free_nilpotent(f, r);
        benchmark::DoNotOptimize(report.overall());
    }
}
BENCHMARK(BM_VerifyFreeNilpotent)->Arg(4)->Arg(5)->Arg(6);

static void BM_StructureConstants(benchmark::State& state) {
    const Frame f = symmetric_model().frame;
    const std::vector<int> layers = weights_258().weights();
    for (auto _ : state) {
        CarnotAlgebra alg = structure_constants_from_frame(f, layers);
        benchmark::DoNotOptimize(alg.dimension());
    }
}
BENCHMARK(BM_StructureConstants);

static void BM_SymmetryAnsatz(benchmark::State& state) {
    const VectorField base = symmetry_field_235();
    for (auto _ : state) {
        auto result = continue_symmetry_ansatz(base);
        benchmark::DoNotOptimize(result.p);
    }
}
BENCHMARK(BM_SymmetryAnsatz);

static void BM_ModelAnsatz(benchmark::State& state) {
    const Frame base = symmetric_model_235();
    for (auto _ : state) {
        auto result = extend_model_ansatz(base);
        benchmark::DoNotOptimize(result.determinant);
    }
}
BENCHMARK(BM_ModelAnsatz);

BENCHMARK_MAIN();
