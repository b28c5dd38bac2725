#include "netproj/backboning.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "netproj/error.hpp"

namespace netproj {

std::string_view to_string(BackboneMethod method) {
  switch (method) {
    case BackboneMethod::Naive: return "naive";
    case BackboneMethod::DisparityFilter: return "df";
    case BackboneMethod::NoiseCorrected: return "nc";
  }
  return "?";
}

BackboneMethod backbone_from_string(std::string_view name) {
  for (auto m : {BackboneMethod::Naive, BackboneMethod::DisparityFilter, BackboneMethod::NoiseCorrected}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown backboning method '" + std::string(name) + "'");
}

namespace {

std::vector<double> strengths(const WeightedGraph& g) {
  std::vector<double> s(g.node_count(), 0.0);
  for (const auto& e : g.edges()) {
    s[e.a] += e.weight;
    s[e.b] += e.weight;
  }
  return s;
}

void require_edges(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DataError("cannot score an empty graph");
}

}  // namespace

double disparity_significance(double weight, double strength, std::size_t degree) {
  if (degree < 2) return 0.0;
  const double remainder = std::max(0.0, 1.0 - weight / strength);
  return 1.0 - std::pow(remainder, static_cast<double>(degree - 1));
}

ScoredBackbone score_naive(std::shared_ptr<const WeightedGraph> graph) {
  require_edges(*graph);
  ScoredBackbone out{graph, {}, BackboneMethod::Naive};
  out.scores.reserve(graph->edge_count());
  for (const auto& e : graph->edges()) out.scores.push_back(e.weight);
  return out;
}

ScoredBackbone score_disparity(std::shared_ptr<const WeightedGraph> graph) {
  require_edges(*graph);
  const auto s = strengths(*graph);
  ScoredBackbone out{graph, {}, BackboneMethod::DisparityFilter};
  out.scores.reserve(graph->edge_count());
  for (const auto& e : graph->edges()) {
    const double from_a = disparity_significance(e.weight, s[e.a], graph->degree(e.a));
    const double from_b = disparity_significance(e.weight, s[e.b], graph->degree(e.b));
    out.scores.push_back(std::clamp(std::max(from_a, from_b), 0.0, 1.0));
  }
  return out;
}

std::vector<NullModelTerms> noise_corrected_terms(const WeightedGraph& graph) {
  const auto s = strengths(graph);
  const double total = graph.total_weight();
  std::vector<NullModelTerms> terms;
  terms.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    const double expectation = s[e.a] * s[e.b] / total;
    const double variance = expectation * (1.0 - s[e.a] / total) * (1.0 - s[e.b] / total);
    terms.push_back({expectation, variance});
  }
  return terms;
}

ScoredBackbone score_noise_corrected(std::shared_ptr<const WeightedGraph> graph) {
  require_edges(*graph);
  const auto terms = noise_corrected_terms(*graph);
  ScoredBackbone out{graph, {}, BackboneMethod::NoiseCorrected};
  out.scores.reserve(graph->edge_count());
  const auto edges = graph->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double deviation = edges[i].weight - terms[i].expectation;
    if (terms[i].variance > 0.0) {
      out.scores.push_back(deviation / std::sqrt(terms[i].variance));
    } else {
      out.scores.push_back(deviation > 0.0 ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity());
    }
  }
  return out;
}

ScoredBackbone score(std::shared_ptr<const WeightedGraph> graph, BackboneMethod method) {
  switch (method) {
    case BackboneMethod::Naive: return score_naive(std::move(graph));
    case BackboneMethod::DisparityFilter: return score_disparity(std::move(graph));
    case BackboneMethod::NoiseCorrected: return score_noise_corrected(std::move(graph));
  }
  throw std::invalid_argument("unknown backboning method");
}

std::vector<double> default_fractions() {
  return {0.50, 0.35, 0.25, 0.18, 0.12, 0.08, 0.05, 0.03, 0.02};
}

void validate_fractions(std::span<const double> fractions) {
  if (fractions.empty()) throw std::invalid_argument("no threshold fractions given");
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (!(fractions[i] > 0.0 && fractions[i] <= 1.0)) {
      throw std::invalid_argument("threshold fractions must lie in (0, 1]");
    }
    if (i > 0 && !(fractions[i] < fractions[i - 1])) {
      throw std::invalid_argument("threshold fractions must be strictly decreasing");
    }
  }
}

ThresholdGrid resolve_thresholds(const ScoredBackbone& scored, std::span<const double> fractions) {
  validate_fractions(fractions);
  std::vector<double> sorted(scored.scores);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  ThresholdGrid grid;
  grid.fractions.assign(fractions.begin(), fractions.end());
  const double m = static_cast<double>(sorted.size());
  for (double f : fractions) {
    if (sorted.empty()) {
      grid.cutoffs.push_back(std::numeric_limits<double>::infinity());
      grid.retained_counts.push_back(0);
      continue;
    }
    // Slack for f * |E| landing on an integer.
    auto wanted = static_cast<std::size_t>(std::ceil(f * m - 1e-9));
    wanted = std::clamp<std::size_t>(wanted, 1, sorted.size());
    const double cutoff = sorted[wanted - 1];
    const auto retained = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), cutoff, std::greater<>()) - sorted.begin());
    grid.cutoffs.push_back(cutoff);
    grid.retained_counts.push_back(retained);
  }
  return grid;
}

WeightedGraph extract(const ScoredBackbone& scored, double cutoff) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < scored.scores.size(); ++i) {
    if (scored.scores[i] >= cutoff) kept.push_back(i);
  }
  return scored.base->with_edges(kept);
}

}  // namespace netproj
