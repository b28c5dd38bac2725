#include "netproj/bipartite_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "netproj/error.hpp"

namespace netproj {

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side side_from_string(std::string_view name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  throw std::invalid_argument("unknown side '" + std::string(name) + "'");
}

namespace {

void build_csr(std::size_t n, std::span<const BipartiteEdge> edges, bool by_left,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& adjacency) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(by_left ? e.left : e.right) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adjacency.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    const NodeId from = by_left ? e.left : e.right;
    adjacency[cursor[from]++] = by_left ? e.right : e.left;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

void require_unique(const std::vector<std::string>& labels, std::string_view side) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DataError("duplicate " + std::string(side) + " node id '" + l + "'");
    }
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<std::string> left_labels,
                               std::vector<std::string> right_labels,
                               std::vector<BipartiteEdge> edges)
    : left_labels_(std::move(left_labels)),
      right_labels_(std::move(right_labels)),
      edges_(std::move(edges)) {
  require_unique(left_labels_, "left");
  require_unique(right_labels_, "right");
  {
    std::unordered_set<std::string_view> left(left_labels_.begin(), left_labels_.end());
    for (const auto& r : right_labels_) {
      if (left.contains(r)) throw DataError("node id '" + r + "' appears on both sides");
    }
  }
  for (const auto& e : edges_) {
    if (e.left >= left_labels_.size() || e.right >= right_labels_.size()) {
      throw DataError("bipartite edge endpoint out of range");
    }
    if (e.multiplicity == 0) throw DataError("edge multiplicity must be positive");
  }
  std::sort(edges_.begin(), edges_.end(), [](const BipartiteEdge& a, const BipartiteEdge& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].left == edges_[i - 1].left && edges_[i].right == edges_[i - 1].right) {
      throw DataError("duplicate edge (" + left_labels_[edges_[i].left] + ", " +
                      right_labels_[edges_[i].right] + ")");
    }
  }
  build_csr(left_labels_.size(), edges_, true, left_offsets_, left_adjacency_);
  build_csr(right_labels_.size(), edges_, false, right_offsets_, right_adjacency_);
}

std::uint64_t BipartiteGraph::total_multiplicity() const {
  return std::accumulate(edges_.begin(), edges_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const BipartiteEdge& e) { return acc + e.multiplicity; });
}

std::span<const NodeId> BipartiteGraph::neighbors(Side side, NodeId v) const {
  const auto& offsets = side == Side::Left ? left_offsets_ : right_offsets_;
  const auto& adjacency = side == Side::Left ? left_adjacency_ : right_adjacency_;
  return {adjacency.data() + offsets[v], adjacency.data() + offsets[v + 1]};
}

Eigen::SparseMatrix<double> BipartiteGraph::incidence(Side side) const {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (side == Side::Left) {
      entries.emplace_back(e.left, e.right, 1.0);
    } else {
      entries.emplace_back(e.right, e.left, 1.0);
    }
  }
  Eigen::SparseMatrix<double> m(static_cast<Eigen::Index>(node_count(side)),
                                static_cast<Eigen::Index>(node_count(opposite(side))));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

}  // namespace netproj
