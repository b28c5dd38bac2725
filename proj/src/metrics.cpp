#include "netproj/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "netproj/error.hpp"
#include "netproj/stats.hpp"

namespace netproj {

namespace {

void require_same_universe(const WeightedGraph& g1, const WeightedGraph& g2) {
  if (g1.node_count() != g2.node_count()) {
    throw std::invalid_argument("graphs are defined over different node sets");
  }
}

}  // namespace

double coverage(const WeightedGraph& graph) {
  if (graph.node_count() == 0) throw UndefinedError("coverage of a graph without nodes");
  std::size_t covered = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) covered += graph.degree(v) > 0;
  return static_cast<double>(covered) / static_cast<double>(graph.node_count());
}

TriangleCounts triangle_counts(const WeightedGraph& graph) {
  const std::size_t n = graph.node_count();
  TriangleCounts counts;
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t d = graph.degree(v);
    if (d >= 2) counts.triads += d * (d - 1) / 2;
  }
  // Orient each edge toward the endpoint of higher (degree, id) so every
  // triangle is found exactly once from its lowest-ranked corner.
  auto ranks_below = [&](NodeId a, NodeId b) {
    const auto da = graph.degree(a), db = graph.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::vector<NodeId>> forward(n);
  for (const auto& e : graph.edges()) {
    if (ranks_below(e.a, e.b)) {
      forward[e.a].push_back(e.b);
    } else {
      forward[e.b].push_back(e.a);
    }
  }
  for (auto& list : forward) std::sort(list.begin(), list.end());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : forward[u]) {
      const auto& fu = forward[u];
      const auto& fv = forward[v];
      auto i = fu.begin();
      auto j = fv.begin();
      while (i != fu.end() && j != fv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++counts.triangles;
          ++i;
          ++j;
        }
      }
    }
  }
  return counts;
}

double transitivity(const WeightedGraph& graph) {
  const auto c = triangle_counts(graph);
  if (c.triads == 0) return 0.0;
  return 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.triads);
}

double neighbor_jaccard(const WeightedGraph& g1, const WeightedGraph& g2) {
  require_same_universe(g1, g2);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId u = 0; u < g1.node_count(); ++u) {
    const auto a = g1.neighbors(u);
    const auto b = g2.neighbors(u);
    if (a.empty() && b.empty()) continue;
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (i->node < j->node) {
        ++i;
      } else if (j->node < i->node) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    sum += static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
    ++counted;
  }
  if (counted == 0) throw UndefinedError("undefined similarity: no node has neighbours");
  return sum / static_cast<double>(counted);
}

ClusteringComparison cc_similarity(const WeightedGraph& g1, const WeightedGraph& g2) {
  const double distance = std::abs(transitivity(g1) - transitivity(g2));
  return {1.0 - distance, distance};
}

Eigen::VectorXd degree_vector(const WeightedGraph& graph) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(graph.node_count()));
  for (NodeId v = 0; v < graph.node_count(); ++v) d(v) = static_cast<double>(graph.degree(v));
  return d;
}

double degree_correlation(const WeightedGraph& g1, const WeightedGraph& g2) {
  require_same_universe(g1, g2);
  if (g1.node_count() < 3) throw UndefinedError("undefined correlation: fewer than three nodes");
  const auto r = spearman(degree_vector(g1), degree_vector(g2));
  if (!r) throw UndefinedError("undefined correlation: constant degree vector");
  return *r;
}

Eigen::VectorXd betweenness(const WeightedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 3) throw UndefinedError("betweenness normalisation needs at least three nodes");
  Eigen::VectorXd total = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  std::vector<double> sigma(n), delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (graph.degree(s) == 0) continue;
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (const auto& nb : graph.neighbors(v)) {
        const NodeId w = nb.node;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const NodeId w = order[k];
      const double share = (1.0 + delta[w]) / sigma[w];
      for (const auto& nb : graph.neighbors(w)) {
        if (dist[nb.node] == dist[w] - 1) delta[nb.node] += sigma[nb.node] * share;
      }
      total(w) += delta[w];
    }
  }
  // Every unordered pair was visited from both ends.
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  return total / (2.0 * pairs);
}

double centralization(const WeightedGraph& graph) {
  if (graph.node_count() < 3) throw UndefinedError("centralization undefined for fewer than three nodes");
  const Eigen::VectorXd c = betweenness(graph);
  const double gap = (c.maxCoeff() - c.array()).sum();
  return gap / static_cast<double>(graph.node_count() - 1);
}

TopologyReport topology_report(const WeightedGraph& backbone, const TopologyOptions& options) {
  TopologyReport report;
  report.node_count = backbone.node_count();
  report.edge_count = backbone.edge_count();
  report.coverage = coverage(backbone);
  report.transitivity = transitivity(backbone);
  if (backbone.edge_count() > 0) {
    report.modularity = modularity_partition(backbone, options.seed).modularity;
  }
  if (options.with_centralization) {
    const WeightedGraph active = backbone.without_isolates();
    if (active.node_count() >= 3) report.centralization = centralization(active);
  }
  return report;
}

}  // namespace netproj
