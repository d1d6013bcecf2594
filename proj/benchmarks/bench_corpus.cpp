#include <benchmark/benchmark.h>

#include "zlat/enumerate.hpp"
#include "zlat/fixtures.hpp"
#include "zlat/search.hpp"
#include "zlat/theorems.hpp"

namespace {

void bm_enumerate_lattices(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto lats = zlat::enumerate_lattices(n);
    benchmark::DoNotOptimize(lats.size());
  }
}
BENCHMARK(bm_enumerate_lattices)->Arg(3)->Arg(4)->Arg(5);

void bm_corpus_stream(benchmark::State& state) {
  zlat::corpus_spec spec;
  spec.max_n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    unsigned long count = 0;
    zlat::enumerate_corpus(spec, [&](const zlat::mult_lattice&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_corpus_stream)->Arg(3)->Arg(4);

void bm_spectra_fixture(benchmark::State& state) {
  for (auto _ : state) {
    zlat::mult_lattice ml = zlat::fixture_by_name("D12");
    benchmark::DoNotOptimize(ml.spectra().z_set.bits());
  }
}
BENCHMARK(bm_spectra_fixture);

void bm_theorems_fixture(benchmark::State& state) {
  zlat::mult_lattice ml = zlat::fixture_by_name("B4");
  for (auto _ : state) {
    auto reports = zlat::run_theorems(ml);
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(bm_theorems_fixture);

void bm_search_fixture_witness(benchmark::State& state) {
  zlat::corpus_spec spec;
  spec.max_n = 4;
  for (auto _ : state) {
    auto r = zlat::search_counterexample(zlat::property_id::zproduct_not_closed, spec);
    benchmark::DoNotOptimize(r.found);
  }
}
BENCHMARK(bm_search_fixture_witness);

} // namespace

BENCHMARK_MAIN();
