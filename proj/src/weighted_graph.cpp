#include "netproj/weighted_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netproj/error.hpp"

namespace netproj {

WeightedGraph::WeightedGraph() : WeightedGraph(std::vector<std::string>{}, {}) {}

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges)
    : WeightedGraph(std::make_shared<const std::vector<std::string>>(std::move(labels)),
                    std::move(edges)) {}

WeightedGraph::WeightedGraph(Labels labels, std::vector<WeightedEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (!labels_) labels_ = std::make_shared<const std::vector<std::string>>();
  const std::size_t n = labels_->size();
  for (auto& e : edges_) {
    if (e.a == e.b) throw DataError("self-loop on node " + std::to_string(e.a));
    if (e.a >= n || e.b >= n) throw DataError("edge endpoint out of range");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw DataError("edge weight must be positive and finite");
    }
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].a == edges_[i - 1].a && edges_[i].b == edges_[i - 1].b) {
      throw DataError("duplicate edge (" + label(edges_[i].a) + ", " + label(edges_[i].b) + ")");
    }
  }

  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.a + 1];
    ++offsets_[e.b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (a, b): appending in edge order yields sorted lists
  // for the b side; the a side is sorted after the fill.
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[cursor[e.a]++] = {e.b, i};
    adjacency_[cursor[e.b]++] = {e.a, i};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
  }
}

WeightedGraph WeightedGraph::from_symmetric(Labels labels,
                                            const Eigen::SparseMatrix<double>& matrix) {
  std::vector<WeightedEdge> edges;
  for (Eigen::Index col = 0; col < matrix.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, col); it; ++it) {
      if (it.row() < it.col() && it.value() != 0.0) {
        edges.push_back({static_cast<NodeId>(it.row()), static_cast<NodeId>(it.col()), it.value()});
      }
    }
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

double WeightedGraph::strength(NodeId v) const {
  double s = 0.0;
  for (const auto& nb : neighbors(v)) s += edges_[nb.edge].weight;
  return s;
}

double WeightedGraph::total_weight() const {
  double t = 0.0;
  for (const auto& e : edges_) t += e.weight;
  return t;
}

std::optional<std::size_t> WeightedGraph::find_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  const auto nbs = neighbors(u);
  auto it = std::lower_bound(nbs.begin(), nbs.end(), v,
                             [](const Neighbor& x, NodeId id) { return x.node < id; });
  if (it == nbs.end() || it->node != v) return std::nullopt;
  return it->edge;
}

WeightedGraph WeightedGraph::with_edges(std::span<const std::size_t> edge_indices) const {
  std::vector<WeightedEdge> kept;
  kept.reserve(edge_indices.size());
  for (std::size_t i : edge_indices) kept.push_back(edges_.at(i));
  return WeightedGraph(labels_, std::move(kept));
}

WeightedGraph WeightedGraph::without_isolates() const {
  std::vector<NodeId> remap(node_count(), 0);
  std::vector<std::string> kept_labels;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (degree(v) > 0) {
      remap[v] = static_cast<NodeId>(kept_labels.size());
      kept_labels.push_back(label(v));
    }
  }
  std::vector<WeightedEdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) kept.push_back({remap[e.a], remap[e.b], e.weight});
  return WeightedGraph(std::move(kept_labels), std::move(kept));
}

bool operator==(const WeightedGraph& lhs, const WeightedGraph& rhs) {
  return *lhs.labels_ == *rhs.labels_ && lhs.edges_ == rhs.edges_;
}

}  // namespace netproj
