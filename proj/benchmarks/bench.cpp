// Microbenchmarks for the four hot loops: subgroup closure, conjugacy
// class orbits, translation tables and the translation-group closure.

#include <benchmark/benchmark.h>

#include "quandles/group.hpp"
#include "quandles/perm.hpp"
#include "quandles/quandle.hpp"

using quandles::ConjugationQuandle;
using quandles::FiniteGroup;
using quandles::GroupElement;
using quandles::Permutation;

namespace {

GroupElement transposition(int degree) {
  return GroupElement(Permutation::parse_cycles("(1 2)", degree));
}

void BM_SubgroupClosure(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FiniteGroup g = quandles::symmetric_group(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SubgroupClosure)->Arg(5)->Arg(6)->Arg(7);

void BM_ConjugacyClassOrbit(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FiniteGroup g = quandles::symmetric_group(n);
  GroupElement e = transposition(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(g.conjugacy_class(e).members.size());
}
BENCHMARK(BM_ConjugacyClassOrbit)->Arg(8)->Arg(16)->Arg(24);

void BM_TranslationTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FiniteGroup g = quandles::symmetric_group(n);
  auto cls = g.conjugacy_class(transposition(n));
  for (auto _ : state) {
    auto q = ConjugationQuandle::of_class(cls);
    benchmark::DoNotOptimize(q.translation_table().size());
  }
}
BENCHMARK(BM_TranslationTable)->Arg(5)->Arg(6)->Arg(7);

void BM_LmltClosure(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FiniteGroup g = quandles::symmetric_group(n);
  auto cls = g.conjugacy_class(transposition(n));
  for (auto _ : state) {
    auto q = ConjugationQuandle::of_class(cls);
    benchmark::DoNotOptimize(q.lmlt_order());
  }
}
BENCHMARK(BM_LmltClosure)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
