#include "quadorbit/dynamics.hpp"
#include "quadorbit/families.hpp"
#include "quadorbit/roots.hpp"
#include "quadorbit/search.hpp"
#include "quadorbit/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace quadorbit;

namespace {

Rat q(const char* s) { return Rat::parse(s); }

void BM_MonoidOrbit(benchmark::State& state) {
    MapSet s({q("-5/16"), q("-13/16"), q("-21/16")});
    for (auto _ : state) benchmark::DoNotOptimize(monoid_orbit(s, q("1/4")));
}
BENCHMARK(BM_MonoidOrbit);

void BM_FiniteOrbitPoints(benchmark::State& state) {
    MapSet s({q("3/16"), q("-5/16"), q("-13/16")});
    for (auto _ : state) benchmark::DoNotOptimize(finite_orbit_points(s));
}
BENCHMARK(BM_FiniteOrbitPoints);

void BM_Preperiodic(benchmark::State& state) {
    QuadMap f{q("-29/16")};
    for (auto _ : state) benchmark::DoNotOptimize(is_preperiodic(f, q("3/4")));
}
BENCHMARK(BM_Preperiodic);

// Rational roots of prod (k x - 1) times an irreducible quadratic, by degree.
void BM_RationalRoots(benchmark::State& state) {
    UniPoly p = UniPoly({Rat(3), Rat(0), Rat(1)}, "x");
    for (long k = 1; k <= state.range(0); ++k) p *= UniPoly({Rat(-1), Rat(k)}, "x");
    for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p));
}
BENCHMARK(BM_RationalRoots)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FamilySymbolic(benchmark::State& state) {
    const FamilyDef& f = catalog().family("F-22a");
    for (auto _ : state) benchmark::DoNotOptimize(family_verify_symbolic(f));
}
BENCHMARK(BM_FamilySymbolic)->Unit(benchmark::kMillisecond);

void BM_Lemma(benchmark::State& state) {
    const std::string id = lemma_ids()[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(id);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lemma(id));
}
BENCHMARK(BM_Lemma)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Case(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_case(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Case)->DenseRange(1, 10)->Unit(benchmark::kMillisecond);

void BM_SearchTriples(benchmark::State& state) {
    SearchSpec s;
    s.subset_pruning = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(search(s));
}
BENCHMARK(BM_SearchTriples)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
