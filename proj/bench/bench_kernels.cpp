// Serial reference against parallel kernel, one pair per kernel.

#include <benchmark/benchmark.h>

#include "framelab/arrows.hpp"
#include "framelab/definability.hpp"
#include "framelab/semantics.hpp"

using namespace framelab;

namespace {

FrameStore& shared_store() {
  static FrameStore store;
  return store;
}

const std::vector<TermPtr>& shared_corpus() {
  static const std::vector<TermPtr> corpus =
      enumerate_closed_terms(Signature::lambda_c(), Type::parse("bool -> bool"), 5);
  return corpus;
}

void BM_EnumerateMonotoneSerial(benchmark::State& state) {
  FrameStore& store = shared_store();
  const Layer& dom = store.layer(Family::L, Type::parse("bool"));
  const Layer& cod = store.layer(Family::L, Type::parse("bool -> bool"));
  for (auto _ : state) {
    TableSet tables = enumerate_monotone_tables_serial(dom, cod, kDefaultBudget, "bench");
    benchmark::DoNotOptimize(tables.count);
  }
}

void BM_EnumerateMonotoneParallel(benchmark::State& state) {
  FrameStore& store = shared_store();
  const Layer& dom = store.layer(Family::L, Type::parse("bool"));
  const Layer& cod = store.layer(Family::L, Type::parse("bool -> bool"));
  for (auto _ : state) {
    TableSet tables = enumerate_monotone_tables(dom, cod, kDefaultBudget, "bench");
    benchmark::DoNotOptimize(tables.count);
  }
}

void BM_UniqueSoundConstantSerial(benchmark::State& state) {
  FrameStore& store = shared_store();
  for (auto _ : state) {
    auto sound = unique_sound_constant_serial(store, Signature::lambda_c(), Family::L, "por");
    benchmark::DoNotOptimize(sound.size());
  }
}

void BM_UniqueSoundConstantParallel(benchmark::State& state) {
  FrameStore& store = shared_store();
  for (auto _ : state) {
    auto sound = unique_sound_constant(store, Signature::lambda_c(), Family::L, "por");
    benchmark::DoNotOptimize(sound.size());
  }
}

void BM_InterpretCorpusSerial(benchmark::State& state) {
  FrameStore& store = shared_store();
  const auto& corpus = shared_corpus();
  for (auto _ : state) {
    auto values = interpret_corpus_serial(store, corpus, Family::L);
    benchmark::DoNotOptimize(values.size());
  }
}

void BM_InterpretCorpusParallel(benchmark::State& state) {
  FrameStore& store = shared_store();
  const auto& corpus = shared_corpus();
  for (auto _ : state) {
    auto values = interpret_corpus(store, corpus, Family::L);
    benchmark::DoNotOptimize(values.size());
  }
}

void BM_LiftLogicalSerial(benchmark::State& state) {
  FrameStore& store = shared_store();
  std::vector<TypeRef> types = {Type::parse("bool -> bool -> bool")};
  for (auto _ : state) {
    Relation rel = lift_logical_serial(store, Family::C, Family::E, e_bool_pairs(), types);
    benchmark::DoNotOptimize(rel.by_type.size());
  }
}

void BM_LiftLogicalParallel(benchmark::State& state) {
  FrameStore& store = shared_store();
  std::vector<TypeRef> types = {Type::parse("bool -> bool -> bool")};
  for (auto _ : state) {
    Relation rel = lift_logical(store, Family::C, Family::E, e_bool_pairs(), types);
    benchmark::DoNotOptimize(rel.by_type.size());
  }
}

BENCHMARK(BM_EnumerateMonotoneSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateMonotoneParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniqueSoundConstantSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniqueSoundConstantParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterpretCorpusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterpretCorpusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftLogicalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftLogicalParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
