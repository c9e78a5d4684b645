// Microbenchmarks for the exact solvers and the full analysis pipeline.
// The reference networks are tiny, so a second series runs each solver on
// seeded random digraphs at enumeration scale (12..20 vertices).

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "dgi/arborescence.hpp"
#include "dgi/connectivity.hpp"
#include "dgi/fixtures.hpp"
#include "dgi/invariants.hpp"
#include "dgi/report.hpp"
#include "dgi/reproduce.hpp"

namespace {

dgi::Digraph random_graph(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<dgi::VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back("n" + std::to_string(i));
  }
  std::vector<dgi::Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && keep(rng)) arcs.push_back({vertices[i], vertices[j]});
    }
  }
  return dgi::Digraph::build(vertices, arcs);
}

const dgi::Digraph& largest_fixture() {
  static const dgi::Digraph g = dgi::fixture(dgi::FixtureId::kD6).digraph;
  return g;
}

void BM_AnalyzeLargestFixture(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::analyze(largest_fixture()));
  }
}
BENCHMARK(BM_AnalyzeLargestFixture);

void BM_ReproduceAll(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::reproduce_all());
  }
}
BENCHMARK(BM_ReproduceAll);

void BM_Matching(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3,
                                41u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::maximum_matching(g));
  }
}
BENCHMARK(BM_Matching)->Arg(12)->Arg(16)->Arg(20);

void BM_IndependentSet(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3,
                                42u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::max_independent_set(g));
  }
}
BENCHMARK(BM_IndependentSet)->Arg(12)->Arg(16)->Arg(20);

void BM_Coloring(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3,
                                43u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::chromatic_partition(g));
  }
}
BENCHMARK(BM_Coloring)->Arg(12)->Arg(16);

void BM_DominatingSet(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3,
                                44u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::min_dominating_set(g));
  }
}
BENCHMARK(BM_DominatingSet)->Arg(12)->Arg(16)->Arg(20);

void BM_VertexIntegrity(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3,
                                45u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::vertex_integrity(g));
  }
}
BENCHMARK(BM_VertexIntegrity)->Arg(10)->Arg(12);

void BM_TransitiveClosure(benchmark::State& state) {
  dgi::Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2,
                                46u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::transitive_closure(g));
  }
}
BENCHMARK(BM_TransitiveClosure)->Arg(20)->Arg(40);

void BM_CountArborescences(benchmark::State& state) {
  const dgi::Digraph& g = dgi::fixture(dgi::FixtureId::kD5).digraph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dgi::count_arborescences(g, "v7"));
  }
}
BENCHMARK(BM_CountArborescences);

}  // namespace

BENCHMARK_MAIN();
