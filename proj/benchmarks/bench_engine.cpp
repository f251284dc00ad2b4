// Microbenchmarks for the hot paths: parsing, Buchberger completion, Milnor
// algebras, full cohomology scans, and the big invariant-relation expansion.
#include <benchmark/benchmark.h>

#include "hh/catalog.hpp"
#include "hh/groebner.hpp"
#include "hh/koszul.hpp"
#include "hh/parse.hpp"
#include "hh/quotient.hpp"

using namespace hh;

static void BM_ParseDegree30Invariant(benchmark::State& state) {
    const std::string text = klein_invariants(Family::E8, 0)[2].to_string();
    const Vars xy = Vars::xy();
    for (auto _ : state) {
        Polynomial p = parse_polynomial(text, xy);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ParseDegree30Invariant);

static void BM_BuchbergerJacobianE7Surface(benchmark::State& state) {
    const Polynomial f = surface_polynomial(Family::E7, 0);
    const Ideal j = jacobian_ideal(f);
    const MonomialOrder ord = MonomialOrder::lex(3);
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(j, ord);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_BuchbergerJacobianE7Surface);

static void BM_MilnorE8Surface(benchmark::State& state) {
    const Polynomial f = surface_polynomial(Family::E8, 0);
    for (auto _ : state) {
        unsigned mu = milnor_number(f);
        benchmark::DoNotOptimize(mu);
    }
}
BENCHMARK(BM_MilnorE8Surface);

static void BM_CohomologyCurveA2(benchmark::State& state) {
    const Polynomial f = curve_polynomial(Family::A, 2);
    for (auto _ : state) {
        CohomologyReport rep = KoszulComplex(f, 5).cohomology();
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CohomologyCurveA2);

static void BM_CohomologySurfaceA4(benchmark::State& state) {
    const Polynomial f = surface_polynomial(Family::A, 4);
    for (auto _ : state) {
        CohomologyReport rep = KoszulComplex(f, 5).cohomology();
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CohomologySurfaceA4);

static void BM_InvariantRelationE8(benchmark::State& state) {
    for (auto _ : state) {
        Check c = verify_invariant_relation(Family::E8, 0);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_InvariantRelationE8);

BENCHMARK_MAIN();
