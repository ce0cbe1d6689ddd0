#include "ospoly/matrix_rep.hpp"
#include "ospoly/ortho.hpp"
#include "ospoly/supertrace.hpp"

#include <benchmark/benchmark.h>

using namespace ospoly;

namespace {

GradedElement sample_element(AlgebraCase cas) {
    GradedElement u = GradedElement::zero(cas);
    for (int g = -2; g <= 2; ++g) {
        HTauPoly f = HTauPoly::h_power(cas, 2) + HTauPoly::h(cas) * Rational(g) +
                     HTauPoly::constant(cas, Rational(g, 3));
        if (cas == AlgebraCase::GenericFG) f += HTauPoly::tau(cas) * Rational(2 * g + 1, 2);
        u += GradedElement::monomial(f, g);
    }
    return u;
}

void BM_NormalFormMultiply(benchmark::State& state) {
    const AlgebraCase cas = static_cast<AlgebraCase>(state.range(0));
    const GradedElement u = sample_element(cas);
    for (auto _ : state) benchmark::DoNotOptimize(u * u);
}
BENCHMARK(BM_NormalFormMultiply)->Arg(0)->Arg(1)->Arg(2);

void BM_MomentTable(benchmark::State& state) {
    for (auto _ : state) {
        MomentTable table(AlgebraCase::GenericFG, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table.even_moment(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_MomentTable)->Arg(8)->Arg(16)->Arg(24);

void BM_GramMatrix(benchmark::State& state) {
    GenericFamily fam;
    std::vector<HTauPoly> members;
    for (int k = 0; k <= state.range(0); ++k) members.push_back(fam.member(k, 0));
    for (auto _ : state) {
        MomentTable table(AlgebraCase::GenericFG, 20);
        benchmark::DoNotOptimize(gram_matrix(members, 0, table));
    }
}
BENCHMARK(BM_GramMatrix)->Arg(3)->Arg(5);

void BM_MatrixProject(benchmark::State& state) {
    const GradedElement u = sample_element(AlgebraCase::GenericFG);
    for (auto _ : state)
        benchmark::DoNotOptimize(project(u, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MatrixProject)->Arg(2)->Arg(4)->Arg(8);

void BM_MatrixFamilyMember(benchmark::State& state) {
    for (auto _ : state) {
        MatrixFamily fam;
        benchmark::DoNotOptimize(fam.member(static_cast<int>(state.range(0)), 0));
    }
}
BENCHMARK(BM_MatrixFamilyMember)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
