#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "partialsat/cnfize.hpp"
#include "partialsat/enumeration.hpp"
#include "partialsat/obdd.hpp"
#include "partialsat/partial_sat.hpp"
#include "partialsat/predabs.hpp"

using namespace partialsat;

namespace {

Formula random_formula(std::mt19937& rng, int atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, 3);
  if (depth == 0 || pick(rng) == 0) {
    std::uniform_int_distribution<int> a(1, atoms);
    Formula v = Formula::var("A" + std::to_string(a(rng)));
    return pick(rng) == 0 ? !v : v;
  }
  const Formula l = random_formula(rng, atoms, depth - 1);
  const Formula r = random_formula(rng, atoms, depth - 1);
  switch (pick(rng)) {
    case 0: return l & r;
    case 1: return l | r;
    case 2: return Formula::implies(l, r);
    default: return Formula::iff(l, r);
  }
}

std::vector<Formula> corpus(int atoms, int depth) {
  std::mt19937 rng(7);
  std::vector<Formula> out;
  for (int i = 0; i < 32; ++i) out.push_back(random_formula(rng, atoms, depth));
  return out;
}

// (X1 | Y1) & ... & (Xn | Yn): 3^n validating models collapse to 2^n cubes.
Formula chain(int n) {
  Formula f = Formula::top();
  for (int i = 1; i <= n; ++i) {
    f = f & (Formula::var("X" + std::to_string(i)) | Formula::var("Y" + std::to_string(i)));
  }
  return f;
}

void BM_ObddEnumerate(benchmark::State& state) {
  const auto fs = corpus(static_cast<int>(state.range(0)), 6);
  std::size_t cubes = 0;
  for (auto _ : state) {
    for (const auto& f : fs) cubes += obdd_enumerate(Obdd::build(f)).assignments.size();
  }
  benchmark::DoNotOptimize(cubes);
}
BENCHMARK(BM_ObddEnumerate)->Arg(6)->Arg(10)->Arg(14);

void BM_TableauxEnumerate(benchmark::State& state) {
  const auto fs = corpus(static_cast<int>(state.range(0)), 6);
  std::size_t cubes = 0;
  for (auto _ : state) {
    for (const auto& f : fs) cubes += tableaux_enumerate(f).assignments.size();
  }
  benchmark::DoNotOptimize(cubes);
}
BENCHMARK(BM_TableauxEnumerate)->Arg(6)->Arg(10)->Arg(14);

void BM_DpllEnumerate(benchmark::State& state) {
  const auto fs = corpus(static_cast<int>(state.range(0)), 6);
  std::size_t cubes = 0;
  for (auto _ : state) {
    for (const auto& f : fs) cubes += dpll_enumerate(f).assignments.size();
  }
  benchmark::DoNotOptimize(cubes);
}
BENCHMARK(BM_DpllEnumerate)->Arg(6)->Arg(10)->Arg(14);

void BM_DpllChain(benchmark::State& state) {
  const Formula f = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpll_enumerate(f).assignments.size());
}
BENCHMARK(BM_DpllChain)->DenseRange(4, 12, 4);

void entails_bench(benchmark::State& state, EntailBackend backend) {
  const int n = static_cast<int>(state.range(0));
  // Every other clause stays open, so the check fails and builds a witness.
  Formula f = chain(n);
  Assignment mu;
  for (int i = 1; i <= n; i += 2) mu = mu.with(Atom("X" + std::to_string(i)), true);
  EntailOptions o;
  o.backend = backend;
  o.brute_cap = 64;
  for (auto _ : state) benchmark::DoNotOptimize(entails(mu, f, o).entails);
}

void BM_EntailsBruteForce(benchmark::State& state) {
  entails_bench(state, EntailBackend::BruteForce);
}
BENCHMARK(BM_EntailsBruteForce)->DenseRange(4, 12, 4);

void BM_EntailsRefutation(benchmark::State& state) {
  entails_bench(state, EntailBackend::DpllRefutation);
}
BENCHMARK(BM_EntailsRefutation)->DenseRange(4, 12, 4);

void BM_Tseitin(benchmark::State& state) {
  const auto fs = corpus(12, static_cast<int>(state.range(0)));
  std::size_t fresh = 0;
  for (auto _ : state) {
    for (const auto& f : fs) fresh += tseitin(f).fresh_atoms.size();
  }
  benchmark::DoNotOptimize(fresh);
}
BENCHMARK(BM_Tseitin)->Arg(4)->Arg(8);

void BM_PredAbs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PredAbsProblem p;
  p.base = Formula::top();
  for (int i = 1; i < n; ++i) {
    p.base = p.base & Formula::implies(Formula::var("B" + std::to_string(i)),
                                       Formula::var("B" + std::to_string(i + 1)));
  }
  for (int i = 1; i <= n; ++i) {
    const Formula b = Formula::var("B" + std::to_string(i));
    const Formula c = Formula::var("B" + std::to_string(i % n + 1));
    p.predicates.push_back({Atom("A" + std::to_string(i)), b & !c});
  }
  for (auto _ : state) {
    const ModeComparison c = compare_modes(p);
    benchmark::DoNotOptimize(c.cube_count_entailing);
  }
}
BENCHMARK(BM_PredAbs)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
