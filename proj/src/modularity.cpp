#include <algorithm>
#include <numeric>
#include <tuple>

#include "netproj/error.hpp"
#include "netproj/metrics.hpp"
#include "netproj/random.hpp"

namespace netproj {

namespace {

// Graph of one aggregation level. Off-diagonal weights are listed from both
// endpoints; a node's internal weight (collapsed community edges) sits in
// `self`, so its degree is Σ_j w_ij + 2 self_i.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> self;
  std::vector<double> degree;
  double total = 0.0;  // 2m

  std::size_t size() const { return self.size(); }
};

LevelGraph from_weighted(const WeightedGraph& graph, EdgeWeighting weighting) {
  LevelGraph level;
  const std::size_t n = graph.node_count();
  level.offsets.resize(n + 1, 0);
  level.self.assign(n, 0.0);
  level.degree.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    level.offsets[v + 1] = level.offsets[v] + graph.degree(v);
    for (const auto& nb : graph.neighbors(v)) {
      const double w = weighting == EdgeWeighting::Weighted ? graph.edges()[nb.edge].weight : 1.0;
      level.targets.push_back(nb.node);
      level.weights.push_back(w);
      level.degree[v] += w;
    }
    level.total += level.degree[v];
  }
  return level;
}

// Local moving phase. Returns true if any node changed community.
bool move_nodes(const LevelGraph& g, std::vector<std::uint32_t>& community, Rng& rng) {
  const std::size_t n = g.size();
  community.resize(n);
  std::iota(community.begin(), community.end(), 0u);
  std::vector<double> tot(g.degree);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(std::span<std::uint32_t>(order));

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  bool moved = true;
  for (int pass = 0; moved && pass < 1000; ++pass) {
    moved = false;
    for (const std::uint32_t i : order) {
      const std::uint32_t home = community[i];
      touched.clear();
      for (std::size_t k = g.offsets[i]; k < g.offsets[i + 1]; ++k) {
        const std::uint32_t c = community[g.targets[k]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += g.weights[k];
      }
      const double ki = g.degree[i];
      tot[home] -= ki;
      std::uint32_t best = home;
      double best_gain = link[home] - tot[home] * ki / g.total;
      for (const std::uint32_t c : touched) {
        const double gain = link[c] - tot[c] * ki / g.total;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best = c;
        }
      }
      tot[best] += ki;
      community[i] = best;
      for (const std::uint32_t c : touched) link[c] = 0.0;
      if (best != home) moved = any_move = true;
    }
  }
  return any_move;
}

// Renumbers community ids densely by first appearance; returns the count.
std::uint32_t renumber(std::vector<std::uint32_t>& community) {
  std::vector<std::uint32_t> remap(community.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& c : community) {
    if (remap[c] == UINT32_MAX) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::uint32_t>& community,
                     std::uint32_t count) {
  LevelGraph next;
  next.self.assign(count, 0.0);
  next.degree.assign(count, 0.0);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> links;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const std::uint32_t ci = community[i];
    next.self[ci] += g.self[i];
    next.degree[ci] += g.degree[i];
    for (std::size_t k = g.offsets[i]; k < g.offsets[i + 1]; ++k) {
      const std::uint32_t j = g.targets[k];
      if (j < i) continue;
      const std::uint32_t cj = community[j];
      if (ci == cj) {
        next.self[ci] += g.weights[k];
      } else {
        links.emplace_back(std::min(ci, cj), std::max(ci, cj), g.weights[k]);
      }
    }
  }
  std::sort(links.begin(), links.end());
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> merged;
  for (const auto& l : links) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(l) &&
        std::get<1>(merged.back()) == std::get<1>(l)) {
      std::get<2>(merged.back()) += std::get<2>(l);
    } else {
      merged.push_back(l);
    }
  }
  next.offsets.assign(count + 1, 0);
  for (const auto& [a, b, w] : merged) {
    ++next.offsets[a + 1];
    ++next.offsets[b + 1];
  }
  for (std::uint32_t c = 0; c < count; ++c) next.offsets[c + 1] += next.offsets[c];
  next.targets.resize(2 * merged.size());
  next.weights.resize(2 * merged.size());
  std::vector<std::size_t> cursor(next.offsets.begin(), next.offsets.end() - 1);
  for (const auto& [a, b, w] : merged) {
    next.targets[cursor[a]] = b;
    next.weights[cursor[a]++] = w;
    next.targets[cursor[b]] = a;
    next.weights[cursor[b]++] = w;
  }
  next.total = g.total;
  return next;
}

}  // namespace

double modularity(const WeightedGraph& graph, std::span<const std::uint32_t> community,
                  EdgeWeighting weighting) {
  if (graph.edge_count() == 0) throw UndefinedError("modularity undefined without edges");
  if (community.size() != graph.node_count()) {
    throw std::invalid_argument("partition size does not match the graph");
  }
  const std::uint32_t count =
      community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + 1;
  std::vector<double> inside(count, 0.0), ends(count, 0.0);
  double m = 0.0;
  for (const auto& e : graph.edges()) {
    const double w = weighting == EdgeWeighting::Weighted ? e.weight : 1.0;
    m += w;
    ends[community[e.a]] += w;
    ends[community[e.b]] += w;
    if (community[e.a] == community[e.b]) inside[community[e.a]] += w;
  }
  double q = 0.0;
  for (std::uint32_t c = 0; c < count; ++c) {
    const double a = ends[c] / (2.0 * m);
    q += inside[c] / m - a * a;
  }
  return q;
}

Partition modularity_partition(const WeightedGraph& graph, std::uint64_t seed,
                               EdgeWeighting weighting) {
  if (graph.edge_count() == 0) throw UndefinedError("modularity undefined without edges");
  Rng rng(seed);
  LevelGraph level = from_weighted(graph, weighting);
  std::vector<std::uint32_t> membership(graph.node_count());
  std::iota(membership.begin(), membership.end(), 0u);
  std::vector<std::uint32_t> community;
  while (move_nodes(level, community, rng)) {
    const std::uint32_t count = renumber(community);
    for (auto& m : membership) m = community[m];
    if (count == level.size()) break;
    level = aggregate(level, community, count);
  }

  Partition result;
  result.community = std::move(membership);
  renumber(result.community);
  result.modularity = modularity(graph, result.community, weighting);
  if (result.modularity < 0.0) {
    std::fill(result.community.begin(), result.community.end(), 0u);
    result.modularity = modularity(graph, result.community, weighting);
  }
  return result;
}

}  // namespace netproj
