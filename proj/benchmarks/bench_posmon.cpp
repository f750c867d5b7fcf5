#include <benchmark/benchmark.h>

#include <posmon/classify.hpp>
#include <posmon/cyclic_semiring.hpp>
#include <posmon/sturm.hpp>

using namespace posmon;

namespace {

IntPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

void PositiveRootCount(benchmark::State& state) {
    // dense degree-n polynomial with mixed signs
    std::vector<Int> c;
    for (long i = 0; i <= state.range(0); ++i) c.push_back((i % 3) - 1 + (i % 5));
    c.back() = 7;
    IntPolynomial p{std::move(c)};
    for (auto _ : state) benchmark::DoNotOptimize(poly_positive_root_count(p));
}
BENCHMARK(PositiveRootCount)->Arg(4)->Arg(8)->Arg(16);

void AntimatterWitnessSearch(benchmark::State& state) {
    AlgebraicReal a = alg_make(poly({-1, 1, 3}), Rational(1, 3), Rational(1, 2));
    SearchBudget budget;
    for (auto _ : state) benchmark::DoNotOptimize(cs_one_is_atom(a, budget));
}
BENCHMARK(AntimatterWitnessSearch);

void WitnessSearchExhaustion(benchmark::State& state) {
    // no witness exists: the search walks the whole pruned budget box
    AlgebraicReal a = alg_make(poly({-1, -1, 3}), Rational(3, 5), Rational(1));
    SearchBudget budget;
    budget.witness_degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cs_one_is_atom(a, budget));
}
BENCHMARK(WitnessSearchExhaustion)->Arg(4)->Arg(8);

void SigmaSearch(benchmark::State& state) {
    AlgebraicReal q = AlgebraicReal::from_rational(Rational(5, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(cs_sigma(q, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(SigmaSearch)->Arg(4)->Arg(6)->Arg(8);

void FactorizationEnumeration(benchmark::State& state) {
    Rational q(3, 2);
    Rational target(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cs_factorizations(q, target, std::nullopt));
}
BENCHMARK(FactorizationEnumeration)->Arg(10)->Arg(20)->Arg(40);

void FgEnumeration(benchmark::State& state) {
    FgMonoid m = fg_construct(make_basis({AlgebraicReal::from_rational(Rational(1))}),
                              {{Rational(4)}, {Rational(6)}, {Rational(9)}, {Rational(11, 2)}});
    Coordinates x = {Rational(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(fg_factorizations(m, x));
}
BENCHMARK(FgEnumeration)->Arg(20)->Arg(40)->Arg(80);

void UnitFractionDecomposition(benchmark::State& state) {
    auto scheme = UnitFractionScheme::primes();
    Rational q(4019, 2310);  // denominator 2*3*5*7*11
    for (auto _ : state) benchmark::DoNotOptimize(uf_canonical(scheme, q));
}
BENCHMARK(UnitFractionDecomposition);

void ClassifyHalfFactorialExample(benchmark::State& state) {
    MonoidSpec spec{FgSpec{{AlgebraicReal::from_rational(Rational(1)), make_pi()},
                           {{Rational(0), Rational(1)},
                            {Rational(2), Rational(0)},
                            {Rational(1), Rational(1, 2)}}}};
    SearchBudget budget;
    for (auto _ : state) benchmark::DoNotOptimize(classify(spec, budget));
}
BENCHMARK(ClassifyHalfFactorialExample);

void PiEnclosureDigits(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pi_enclosure(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(PiEnclosureDigits)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
