#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

namespace netproj {

using NodeId = std::uint32_t;

// Undirected edge with a < b.
struct WeightedEdge {
  NodeId a;
  NodeId b;
  double weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Neighbor {
  NodeId node;
  std::uint32_t edge;  // index into WeightedGraph::edges()
};

using Labels = std::shared_ptr<const std::vector<std::string>>;

// Immutable undirected simple graph with strictly positive edge weights.
// Edges are stored canonically (a < b, sorted by (a, b)); adjacency is CSR
// with neighbours in increasing node order. Node labels are shared between
// graphs derived from one another (projections, backbones).
class WeightedGraph {
 public:
  WeightedGraph();

  // Edges may come in any orientation and order. Throws DataError on a
  // self-loop, a non-positive or non-finite weight, an out-of-range endpoint
  // or a duplicate pair.
  WeightedGraph(Labels labels, std::vector<WeightedEdge> edges);
  WeightedGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

  // Off-diagonal upper-triangle structural entries of a symmetric matrix
  // become edges; zero entries are skipped.
  static WeightedGraph from_symmetric(Labels labels, const Eigen::SparseMatrix<double>& matrix);

  std::size_t node_count() const { return labels_->size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const WeightedEdge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  double strength(NodeId v) const;
  double total_weight() const;

  const std::string& label(NodeId v) const { return (*labels_)[v]; }
  const Labels& labels() const { return labels_; }

  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;

  // Same labels, subset of edges (given by index, any order).
  WeightedGraph with_edges(std::span<const std::size_t> edge_indices) const;

  // Subgraph induced on nodes with degree >= 1, relabelled densely.
  WeightedGraph without_isolates() const;

  friend bool operator==(const WeightedGraph& lhs, const WeightedGraph& rhs);

 private:
  Labels labels_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

}  // namespace netproj
