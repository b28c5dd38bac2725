#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/SparseCore>

#include "netproj/weighted_graph.hpp"

namespace netproj {

enum class Side { Left, Right };

constexpr Side opposite(Side side) { return side == Side::Left ? Side::Right : Side::Left; }
std::string_view to_string(Side side);
Side side_from_string(std::string_view name);

struct BipartiteEdge {
  NodeId left;
  NodeId right;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// Two-mode graph G = (V1, V2, E). Node ids are dense per side and index the
// label vectors. Multiplicity records repeated observations of an edge and is
// ignored by every projection.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Throws DataError when labels repeat within a side, a label appears on
  // both sides, an endpoint is out of range, an edge repeats or has zero
  // multiplicity.
  BipartiteGraph(std::vector<std::string> left_labels, std::vector<std::string> right_labels,
                 std::vector<BipartiteEdge> edges);

  std::size_t node_count(Side side) const { return labels(side).size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint64_t total_multiplicity() const;

  // Sorted by (left, right).
  std::span<const BipartiteEdge> edges() const { return edges_; }

  // Sorted neighbour ids on the opposite side.
  std::span<const NodeId> neighbors(Side side, NodeId v) const;
  std::size_t degree(Side side, NodeId v) const { return neighbors(side, v).size(); }

  const std::vector<std::string>& labels(Side side) const {
    return side == Side::Left ? left_labels_ : right_labels_;
  }

  // |side| x |opposite| incidence matrix with unit entries.
  Eigen::SparseMatrix<double> incidence(Side side) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::string> left_labels_;
  std::vector<std::string> right_labels_;
  std::vector<BipartiteEdge> edges_;
  std::vector<std::size_t> left_offsets_;
  std::vector<NodeId> left_adjacency_;
  std::vector<std::size_t> right_offsets_;
  std::vector<NodeId> right_adjacency_;
};

}  // namespace netproj
