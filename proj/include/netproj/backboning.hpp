#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "netproj/weighted_graph.hpp"

namespace netproj {

enum class BackboneMethod { Naive, DisparityFilter, NoiseCorrected };

std::string_view to_string(BackboneMethod method);
BackboneMethod backbone_from_string(std::string_view name);

// A graph whose edges carry a significance score aligned with base->edges().
// Higher scores are kept first.
struct ScoredBackbone {
  std::shared_ptr<const WeightedGraph> base;
  std::vector<double> scores;
  BackboneMethod method = BackboneMethod::Naive;
};

ScoredBackbone score_naive(std::shared_ptr<const WeightedGraph> graph);

// Edge score is the larger of the two endpoint significances
// 1 - (1 - w/s_i)^(k_i - 1); a degree-one endpoint contributes 0.
ScoredBackbone score_disparity(std::shared_ptr<const WeightedGraph> graph);

// Standardised deviation (w - E) / sqrt(V) from the strength-product null
// E = s_i s_j / T, V = E (1 - s_i/T)(1 - s_j/T), with T the total weight.
// Zero variance maps to +inf when w > E and -inf otherwise.
ScoredBackbone score_noise_corrected(std::shared_ptr<const WeightedGraph> graph);

ScoredBackbone score(std::shared_ptr<const WeightedGraph> graph, BackboneMethod method);

struct NullModelTerms {
  double expectation;
  double variance;
};

// Per-edge expectation and variance used by score_noise_corrected.
std::vector<NullModelTerms> noise_corrected_terms(const WeightedGraph& graph);

// Endpoint disparity significance for an edge of weight w at a node of
// degree k and strength s.
double disparity_significance(double weight, double strength, std::size_t degree);

// Nine retained-edge fractions, loosest first.
std::vector<double> default_fractions();

// Throws std::invalid_argument unless fractions are strictly decreasing and in (0, 1].
void validate_fractions(std::span<const double> fractions);

struct ThresholdGrid {
  std::vector<double> fractions;
  std::vector<double> cutoffs;
  std::vector<std::size_t> retained_counts;
};

// Cutoff for fraction f is the ceil(f |E|)-th largest score; every edge tied
// with it is kept as well.
ThresholdGrid resolve_thresholds(const ScoredBackbone& scored, std::span<const double> fractions);

// Edges with score >= cutoff keep their original weight; every node of the
// base graph remains, possibly isolated.
WeightedGraph extract(const ScoredBackbone& scored, double cutoff);

}  // namespace netproj
