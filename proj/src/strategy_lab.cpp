#include "netproj/strategy_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "netproj/error.hpp"
#include "netproj/stats.hpp"

namespace netproj {

namespace {

// Runs task(i) for i in [0, count) on `workers` threads. Rethrows the
// exception of the lowest failing index.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

[[noreturn]] void rethrow_with_cell(const std::string& cell) {
  try {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error("cell " + cell + ": " + e.what());
  }
}

}  // namespace

ScoreHistogram log_histogram(std::span<const double> scores, std::size_t bins) {
  ScoreHistogram h;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double s : scores) {
    if (!std::isfinite(s)) {
      ++h.nonfinite;
    } else if (s <= 0.0) {
      ++h.nonpositive;
    } else {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  if (!(hi > 0.0) || bins == 0) return h;
  if (hi == lo) {
    h.bin_edges = {lo, hi};
    h.counts = {scores.size() - h.nonfinite - h.nonpositive};
    return h;
  }
  const double log_lo = std::log(lo), step = (std::log(hi) - log_lo) / static_cast<double>(bins);
  h.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) h.bin_edges[b] = std::exp(log_lo + step * static_cast<double>(b));
  h.bin_edges.front() = lo;
  h.bin_edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double s : scores) {
    if (!std::isfinite(s) || s <= 0.0) continue;
    auto b = static_cast<std::size_t>((std::log(s) - log_lo) / step);
    ++h.counts[std::min(b, bins - 1)];
  }
  return h;
}

std::string StrategyRun::strategy() const {
  return std::string(to_string(projection)) + "+" + std::string(to_string(backboning));
}

std::string StrategyRun::label() const { return strategy() + "@" + std::to_string(level); }

std::vector<StrategyRun> run_grid(const BipartiteGraph& graph, const GridConfig& config) {
  validate_fractions(config.fractions);
  if (config.projections.empty() || config.backbonings.empty()) {
    throw std::invalid_argument("grid needs at least one projection and one backboning method");
  }
  const std::size_t n_proj = config.projections.size();
  const std::size_t n_back = config.backbonings.size();
  const std::size_t n_level = config.fractions.size();

  std::vector<std::shared_ptr<const WeightedGraph>> projected(n_proj);
  parallel_for(n_proj, config.workers, [&](std::size_t p) {
    const ProjectionSpec spec{config.projections[p], config.side, config.ycn_tolerance,
                              config.ycn_max_iterations};
    try {
      projected[p] = std::make_shared<const WeightedGraph>(project(graph, spec).graph);
    } catch (...) {
      rethrow_with_cell(std::string(to_string(config.projections[p])));
    }
  });

  std::vector<StrategyRun> runs(n_proj * n_back * n_level);
  parallel_for(n_proj * n_back, config.workers, [&](std::size_t cell) {
    const std::size_t p = cell / n_back, b = cell % n_back;
    StrategyRun proto{config.projections[p], config.backbonings[b], 0, 0.0, 0.0, nullptr, {}, nullptr};
    try {
      const ScoredBackbone scored = score(projected[p], config.backbonings[b]);
      const ThresholdGrid grid = resolve_thresholds(scored, config.fractions);
      auto histogram = std::make_shared<const ScoreHistogram>(log_histogram(scored.scores, config.histogram_bins));
      for (std::size_t l = 0; l < n_level; ++l) {
        StrategyRun& run = runs[cell * n_level + l];
        run = proto;
        run.level = static_cast<int>(l + 1);
        run.fraction = config.fractions[l];
        run.cutoff = grid.cutoffs[l];
        run.backbone = std::make_shared<const WeightedGraph>(extract(scored, grid.cutoffs[l]));
        run.histogram = histogram;
      }
    } catch (...) {
      rethrow_with_cell(proto.strategy());
    }
  });

  const TopologyOptions options{config.seed, config.with_centralization};
  parallel_for(runs.size(), config.workers, [&](std::size_t i) {
    try {
      runs[i].report = topology_report(*runs[i].backbone, options);
    } catch (...) {
      rethrow_with_cell(runs[i].label());
    }
  });
  return runs;
}

std::string_view to_string(SimilarityMetric metric) {
  switch (metric) {
    case SimilarityMetric::Jaccard: return "jaccard";
    case SimilarityMetric::ClusteringCoeff: return "clustering_coeff";
    case SimilarityMetric::DegreeCorr: return "degree_corr";
  }
  return "?";
}

SimilarityMatrix similarity_matrix(std::span<const StrategyRun> runs, SimilarityMetric metric) {
  const auto n = static_cast<Eigen::Index>(runs.size());
  SimilarityMatrix m{metric, Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN()), {}};
  for (const auto& r : runs) m.labels.push_back(r.label());

  switch (metric) {
    case SimilarityMetric::Jaccard:
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          try {
            m.values(i, j) = m.values(j, i) = neighbor_jaccard(*runs[i].backbone, *runs[j].backbone);
          } catch (const UndefinedError&) {
          }
        }
      }
      break;
    case SimilarityMetric::ClusteringCoeff:
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          m.values(i, j) = m.values(j, i) =
              1.0 - std::abs(runs[i].report.transitivity - runs[j].report.transitivity);
        }
      }
      break;
    case SimilarityMetric::DegreeCorr: {
      // Ranks are computed once per run; Spearman is then Pearson on ranks.
      std::vector<std::optional<Eigen::VectorXd>> ranks(runs.size());
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const Eigen::VectorXd d = degree_vector(*runs[i].backbone);
        if (d.size() >= 3 && !(d.array() == d(0)).all()) ranks[i] = average_ranks(d);
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          if (!ranks[i] || !ranks[j]) continue;
          if (ranks[i]->size() != ranks[j]->size()) {
            throw std::invalid_argument("runs are defined over different node sets");
          }
          if (const auto r = pearson(*ranks[i], *ranks[j])) m.values(i, j) = m.values(j, i) = *r;
        }
      }
      break;
    }
  }
  return m;
}

std::array<SimilarityMatrix, 3> similarity_matrices(std::span<const StrategyRun> runs) {
  return {similarity_matrix(runs, SimilarityMetric::Jaccard),
          similarity_matrix(runs, SimilarityMetric::ClusteringCoeff),
          similarity_matrix(runs, SimilarityMetric::DegreeCorr)};
}

Eigen::MatrixXd clustering_distance_matrix(std::span<const StrategyRun> runs) {
  const auto n = static_cast<Eigen::Index>(runs.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      d(i, j) = std::abs(runs[i].report.transitivity - runs[j].report.transitivity);
    }
  }
  return d;
}

StrategyClustering cluster_strategies(const SimilarityMatrix& matrix, std::uint64_t seed) {
  const Eigen::Index n = matrix.values.rows();
  std::vector<WeightedEdge> edges;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double w = matrix.values(i, j);
      if (std::isfinite(w) && w > 0.0) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), w});
      }
    }
  }
  StrategyClustering out{matrix.metric, {}, matrix.labels, 0.0};
  std::vector<std::uint32_t> community(static_cast<std::size_t>(n));
  if (edges.empty()) {
    std::iota(community.begin(), community.end(), 0u);
  } else {
    std::vector<std::string> labels(matrix.labels);
    labels.resize(static_cast<std::size_t>(n));
    const WeightedGraph g(std::move(labels), std::move(edges));
    const Partition partition = modularity_partition(g, seed, EdgeWeighting::Weighted);
    community = partition.community;
    out.modularity = partition.modularity;
  }
  for (std::size_t i = 0; i < community.size(); ++i) {
    if (community[i] >= out.clusters.size()) out.clusters.resize(community[i] + 1);
    out.clusters[community[i]].push_back(i);
  }
  return out;
}

std::vector<CentralizationCell> centralization_grid(std::span<const StrategyRun> runs) {
  std::vector<CentralizationCell> cells;
  cells.reserve(runs.size());
  for (const auto& r : runs) {
    cells.push_back({r.projection, r.backboning, r.level, r.fraction, r.report.centralization});
  }
  return cells;
}

}  // namespace netproj
