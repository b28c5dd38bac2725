#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "netproj/weighted_graph.hpp"

namespace netproj {

// Topology measurements ignore edge weights: a backbone is read as the
// simple graph of its surviving edges.

// Share of nodes with degree >= 1. Throws UndefinedError on a graph without nodes.
double coverage(const WeightedGraph& graph);

struct TriangleCounts {
  std::uint64_t triangles = 0;
  std::uint64_t triads = 0;  // connected triples, Σ_v C(deg v, 2)
};

TriangleCounts triangle_counts(const WeightedGraph& graph);

// 3 x triangles / triads, or 0 when there are no triads.
double transitivity(const WeightedGraph& graph);

// Mean over nodes of |Γ1(u) ∩ Γ2(u)| / |Γ1(u) ∪ Γ2(u)|. Nodes isolated in both
// graphs are left out of the mean. Both graphs must share the node universe.
// Throws UndefinedError when no node has a neighbour in either graph.
double neighbor_jaccard(const WeightedGraph& g1, const WeightedGraph& g2);

struct ClusteringComparison {
  double similarity;  // 1 - |CC1 - CC2|
  double distance;    // |CC1 - CC2|
};

ClusteringComparison cc_similarity(const WeightedGraph& g1, const WeightedGraph& g2);

// Spearman correlation of the two degree vectors (isolates count as degree 0).
// Throws UndefinedError for fewer than three nodes or a constant vector.
double degree_correlation(const WeightedGraph& g1, const WeightedGraph& g2);

// Degree vector as reals, the input to degree_correlation.
Eigen::VectorXd degree_vector(const WeightedGraph& graph);

// Shortest-path betweenness (unweighted, undirected), counting only pairs that
// are connected, divided by (n-1)(n-2)/2. Requires n >= 3.
Eigen::VectorXd betweenness(const WeightedGraph& graph);

// Σ_v (max c - c_v) / (n - 1) over normalised betweenness: 1 for a star,
// 0 for vertex-transitive graphs. Throws UndefinedError for n < 3.
double centralization(const WeightedGraph& graph);

// Edge weights as given (weighted) or every edge weight 1 (unweighted).
enum class EdgeWeighting { Unweighted, Weighted };

// Q = Σ_c (e_c - a_c²), e_c the share of edge weight inside c and a_c the
// share of edge-endpoint weight in c. Throws UndefinedError without edges.
double modularity(const WeightedGraph& graph, std::span<const std::uint32_t> community,
                  EdgeWeighting weighting);

struct Partition {
  std::vector<std::uint32_t> community;  // dense ids numbered by first member
  double modularity = 0.0;
};

// Multi-level greedy modularity maximisation (local moves, then community
// aggregation, repeated). Node visiting order is a seeded shuffle, so the
// result is a deterministic function of (graph, seed). Never returns a
// partition scoring below the single-community partition.
Partition modularity_partition(const WeightedGraph& graph, std::uint64_t seed,
                               EdgeWeighting weighting = EdgeWeighting::Unweighted);

struct TopologyReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double coverage = 0.0;
  double transitivity = 0.0;
  std::optional<double> modularity;      // nullopt without edges
  std::optional<double> centralization;  // over non-isolated nodes; nullopt below 3
};

struct TopologyOptions {
  std::uint64_t seed = 0;
  bool with_centralization = true;
};

TopologyReport topology_report(const WeightedGraph& backbone, const TopologyOptions& options = {});

}  // namespace netproj
