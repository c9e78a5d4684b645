#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dgi/digraph.hpp"
#include "dgi/walk.hpp"

// Deterministic random instances for the cross-check and property suites.
// Everything is seeded, so a failure reproduces bit-for-bit.

namespace dgi::test {

struct CorpusSpec {
  std::size_t count = 200;
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  double min_density = 0.1;
  double max_density = 0.5;
  std::uint32_t seed = 20240817;
};

// Simple digraph on n single-letter vertices; each ordered pair (u, v) with
// u != v becomes an arc with the given probability. Loops never appear and
// isolated vertices are kept.
Digraph random_digraph(std::mt19937& rng, std::size_t n, double density);

std::vector<Digraph> random_corpus(const CorpusSpec& spec);

// Random walk of up to max_steps arcs starting from a uniformly chosen
// vertex; stops early at a sink. May return a single-vertex walk.
Walk random_walk(std::mt19937& rng, const Digraph& g, std::size_t max_steps);

}  // namespace dgi::test
