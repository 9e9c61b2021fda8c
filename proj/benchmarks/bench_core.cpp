#include <benchmark/benchmark.h>

#include "qw/axioms.hpp"
#include "qw/constructions.hpp"
#include "qw/enumerate.hpp"

namespace {

qw::StructureBundle order8_mesh() {
  qw::MeshSpec spec;
  spec.components = {{2, 2}, {4}};
  spec.constants = {{{0, 0}, {1}}, {{1, 0}, {0}}};
  spec.relaxed = true;
  return qw::affine_mesh(spec);
}

void BM_check_osq_order8(benchmark::State& state) {
  qw::StructureBundle b = order8_mesh();
  b.dot = b.star;
  for (auto _ : state)
    benchmark::DoNotOptimize(qw::check_osq(b, qw::OsqMode::reduced));
}
BENCHMARK(BM_check_osq_order8);

void BM_check_bondle_theorem_order8(benchmark::State& state) {
  qw::StructureBundle b = order8_mesh();
  b.dot = b.star;
  b.bullet = b.star;
  for (auto _ : state)
    benchmark::DoNotOptimize(qw::check_bondle(b, qw::BondleMode::theorem));
}
BENCHMARK(BM_check_bondle_theorem_order8);

void BM_enumerate_quandles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qw::enumerate_quandles(n));
}
BENCHMARK(BM_enumerate_quandles)->Arg(4)->Arg(5);

void BM_canonical_form_order5(benchmark::State& state) {
  qw::Catalog cat = qw::enumerate_quandles(5);
  const qw::StructureBundle& b = cat.entries.back();
  for (auto _ : state)
    benchmark::DoNotOptimize(qw::canonical_form(b));
}
BENCHMARK(BM_canonical_form_order5);

void BM_osq_extensions_dihedral3(benchmark::State& state) {
  qw::StructureBundle q = qw::dihedral_quandle(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(qw::enumerate_osq_extensions(*q.star, *q.slash));
}
BENCHMARK(BM_osq_extensions_dihedral3);

}  // namespace

BENCHMARK_MAIN();
