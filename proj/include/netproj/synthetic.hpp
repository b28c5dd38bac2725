#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netproj/bipartite_graph.hpp"
#include "netproj/random.hpp"

namespace netproj {

struct SyntheticParams {
  std::size_t n_left = 400;
  std::size_t n_right = 2000;
  double left_exponent = 2.5;
  double right_exponent = 1.8;
  double target_disassortativity = -0.33;
  std::uint64_t seed = 7;
  // Rewiring stops once within stop_tolerance of the target; the result is
  // rejected if it ends farther than accept_tolerance away.
  double stop_tolerance = 0.01;
  double accept_tolerance = 0.05;
  std::size_t max_proposals_per_edge = 400;
};

struct DegreeSequences {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct SyntheticGraph {
  BipartiteGraph graph;
  DegreeSequences drawn;
  std::size_t rejected_duplicates = 0;
  std::optional<double> disassortativity;  // log-degree Pearson after rewiring
};

// Discrete power-law degree draws for both sides, each capped at the opposite
// side's size, then reconciled to a common stub total (the midpoint of the
// two raw totals) by stub-proportional increments and decrements.
DegreeSequences draw_degree_sequences(const SyntheticParams& params, Rng& rng);

// Configuration-model pairing of the drawn stubs followed by degree-preserving
// double-edge swaps, annealed toward the target log-degree correlation.
// Deterministic for a fixed seed. Throws std::invalid_argument on bad params
// and ConvergenceError (carrying the achieved correlation) if the target is
// not reached. When one side's degrees are all equal the correlation is
// undefined and the unrewired pairing is returned.
SyntheticGraph generate_synthetic_detailed(const SyntheticParams& params);

BipartiteGraph generate_synthetic(const SyntheticParams& params);

}  // namespace netproj
