#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "netproj/backboning.hpp"
#include "netproj/bipartite_graph.hpp"
#include "netproj/metrics.hpp"
#include "netproj/projection.hpp"

namespace netproj {

struct GridConfig {
  std::vector<ProjectionMethod> projections{ProjectionMethod::Simple, ProjectionMethod::Hyperbolic,
                                            ProjectionMethod::ProbS, ProjectionMethod::YCN};
  std::vector<BackboneMethod> backbonings{BackboneMethod::Naive, BackboneMethod::DisparityFilter,
                                          BackboneMethod::NoiseCorrected};
  std::vector<double> fractions = default_fractions();
  Side side = Side::Right;
  double ycn_tolerance = 1e-12;
  std::size_t ycn_max_iterations = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0: hardware concurrency
  std::size_t histogram_bins = 40;
  bool with_centralization = true;
};

// Log-spaced histogram of the strictly positive finite scores of one scored
// graph. Scores <= 0 and infinite scores are tallied separately.
struct ScoreHistogram {
  std::vector<double> bin_edges;  // size = counts.size() + 1
  std::vector<std::size_t> counts;
  std::size_t nonpositive = 0;
  std::size_t nonfinite = 0;
};

ScoreHistogram log_histogram(std::span<const double> scores, std::size_t bins);

struct StrategyRun {
  ProjectionMethod projection;
  BackboneMethod backboning;
  int level;  // 1 = loosest
  double fraction;
  double cutoff;
  std::shared_ptr<const WeightedGraph> backbone;
  TopologyReport report;
  std::shared_ptr<const ScoreHistogram> histogram;  // shared by a strategy's levels

  std::string strategy() const;  // "simple+nc"
  std::string label() const;     // "simple+nc@3"
};

// One run per (projection, backboning, level) in canonical order: projection,
// then backboning, then level, each in configuration order. Cells run on a
// worker pool; a failing cell aborts the grid with its identity in the message.
std::vector<StrategyRun> run_grid(const BipartiteGraph& graph, const GridConfig& config);

enum class SimilarityMetric { Jaccard, ClusteringCoeff, DegreeCorr };

std::string_view to_string(SimilarityMetric metric);

struct SimilarityMatrix {
  SimilarityMetric metric;
  Eigen::MatrixXd values;  // NaN marks an undefined comparison
  std::vector<std::string> labels;
};

SimilarityMatrix similarity_matrix(std::span<const StrategyRun> runs, SimilarityMetric metric);

// Jaccard, clustering-coefficient and degree-correlation matrices.
std::array<SimilarityMatrix, 3> similarity_matrices(std::span<const StrategyRun> runs);

// |ΔCC| between runs, the raw form of the clustering-coefficient similarity.
Eigen::MatrixXd clustering_distance_matrix(std::span<const StrategyRun> runs);

struct StrategyClustering {
  SimilarityMetric metric;
  std::vector<std::vector<std::size_t>> clusters;  // row indices, ordered by first member
  std::vector<std::string> labels;
  double modularity = 0.0;
};

// Reads the matrix as a weighted complete graph (undefined and non-positive
// entries carry no weight, the diagonal is ignored) and partitions it with
// modularity_partition.
StrategyClustering cluster_strategies(const SimilarityMatrix& matrix, std::uint64_t seed);

struct CentralizationCell {
  ProjectionMethod projection;
  BackboneMethod backboning;
  int level;
  double fraction;
  std::optional<double> centralization;
};

std::vector<CentralizationCell> centralization_grid(std::span<const StrategyRun> runs);

// Writes runs.csv, hist_<strategy>.csv, sim_<metric>.csv,
// dist_clustering_coeff.csv, clusters_<metric>.json and centralization.csv.
// Returns the written file names relative to `directory`, sorted.
std::vector<std::string> write_grid_outputs(const std::filesystem::path& directory,
                                            std::span<const StrategyRun> runs,
                                            std::uint64_t seed);

}  // namespace netproj
