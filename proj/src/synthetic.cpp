#include "netproj/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "netproj/degree_report.hpp"
#include "netproj/error.hpp"

namespace netproj {

namespace {

std::vector<std::size_t> draw_power_law(std::size_t count, double exponent, std::size_t cap,
                                        Rng& rng) {
  std::vector<double> cumulative(cap);
  double total = 0.0;
  for (std::size_t k = 1; k <= cap; ++k) {
    total += std::pow(static_cast<double>(k), -exponent);
    cumulative[k - 1] = total;
  }
  std::vector<std::size_t> out(count);
  for (auto& d : out) {
    const double u = rng.unit() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    d = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()) + 1, cap);
  }
  return out;
}

std::vector<NodeId> stubs_of(const std::vector<std::size_t>& degrees) {
  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < degrees.size(); ++v) stubs.insert(stubs.end(), degrees[v], v);
  return stubs;
}

// Moves the stub total to `target`, picking nodes in proportion to degree.
void reconcile(std::vector<std::size_t>& degrees, std::size_t target, std::size_t cap, Rng& rng) {
  auto stubs = stubs_of(degrees);
  while (stubs.size() > target) {
    const auto i = rng.index(stubs.size());
    const NodeId v = stubs[i];
    if (degrees[v] <= 1) continue;
    --degrees[v];
    stubs[i] = stubs.back();
    stubs.pop_back();
  }
  while (stubs.size() < target) {
    const NodeId v = stubs[rng.index(stubs.size())];
    if (degrees[v] >= cap) continue;
    ++degrees[v];
    stubs.push_back(v);
  }
}

std::string padded(char prefix, std::size_t i, std::size_t count) {
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string digits = std::to_string(i);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

std::uint64_t key(NodeId left, NodeId right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

struct LogDegreeMoments {
  double n = 0, sx = 0, sy = 0, sxx = 0, syy = 0;

  double correlation(double sxy) const {
    const double denom = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
    return (n * sxy - sx * sy) / denom;
  }
};

}  // namespace

DegreeSequences draw_degree_sequences(const SyntheticParams& params, Rng& rng) {
  DegreeSequences seq;
  seq.left = draw_power_law(params.n_left, params.left_exponent, params.n_right, rng);
  seq.right = draw_power_law(params.n_right, params.right_exponent, params.n_left, rng);
  std::size_t sum_left = 0, sum_right = 0;
  for (auto d : seq.left) sum_left += d;
  for (auto d : seq.right) sum_right += d;
  std::size_t target = (sum_left + sum_right + 1) / 2;
  target = std::max({target, params.n_left, params.n_right});
  target = std::min(target, params.n_left * params.n_right);
  reconcile(seq.left, target, params.n_right, rng);
  reconcile(seq.right, target, params.n_left, rng);
  return seq;
}

SyntheticGraph generate_synthetic_detailed(const SyntheticParams& params) {
  if (params.n_left < 2 || params.n_right < 2) {
    throw std::invalid_argument("synthetic graph needs at least two nodes per side");
  }
  if (!(params.left_exponent > 1.0) || !(params.right_exponent > 1.0)) {
    throw std::invalid_argument("power-law exponents must exceed 1");
  }
  Rng rng(params.seed);
  SyntheticGraph result;
  result.drawn = draw_degree_sequences(params, rng);

  // Configuration-model pairing.
  const auto left_stubs = stubs_of(result.drawn.left);
  auto right_stubs = stubs_of(result.drawn.right);
  rng.shuffle(std::span<NodeId>(right_stubs));

  std::vector<BipartiteEdge> edges;
  edges.reserve(left_stubs.size());
  std::unordered_set<std::uint64_t> present;
  present.reserve(left_stubs.size() * 2);
  std::vector<std::pair<NodeId, NodeId>> duplicates;
  for (std::size_t i = 0; i < left_stubs.size(); ++i) {
    if (present.insert(key(left_stubs[i], right_stubs[i])).second) {
      edges.push_back({left_stubs[i], right_stubs[i], 1});
    } else {
      duplicates.emplace_back(left_stubs[i], right_stubs[i]);
    }
  }
  // Resolve each duplicate by swapping partners with a random edge;
  // unresolved duplicates are dropped.
  for (const auto& [a, x] : duplicates) {
    bool placed = false;
    for (int attempt = 0; attempt < 200 && !placed && !edges.empty(); ++attempt) {
      auto& other = edges[rng.index(edges.size())];
      const NodeId b = other.left, y = other.right;
      if (a == b || x == y || present.contains(key(a, y)) || present.contains(key(b, x))) continue;
      present.erase(key(b, y));
      other.right = x;
      present.insert(key(b, x));
      edges.push_back({a, y, 1});
      present.insert(key(a, y));
      placed = true;
    }
    if (!placed) ++result.rejected_duplicates;
  }

  std::vector<std::size_t> left_degree(params.n_left, 0), right_degree(params.n_right, 0);
  for (const auto& e : edges) {
    ++left_degree[e.left];
    ++right_degree[e.right];
  }
  std::vector<double> lx(params.n_left), ly(params.n_right);
  for (std::size_t v = 0; v < lx.size(); ++v) lx[v] = std::log(static_cast<double>(std::max<std::size_t>(left_degree[v], 1)));
  for (std::size_t v = 0; v < ly.size(); ++v) ly[v] = std::log(static_cast<double>(std::max<std::size_t>(right_degree[v], 1)));

  LogDegreeMoments m;
  double sxy = 0.0;
  for (const auto& e : edges) {
    const double x = lx[e.left], y = ly[e.right];
    m.n += 1;
    m.sx += x;
    m.sy += y;
    m.sxx += x * x;
    m.syy += y * y;
    sxy += x * y;
  }
  const bool defined = (m.n * m.sxx - m.sx * m.sx) > 1e-12 * m.n * m.n &&
                       (m.n * m.syy - m.sy * m.sy) > 1e-12 * m.n * m.n;

  if (defined && edges.size() >= 2) {
    const double target = params.target_disassortativity;
    double distance = std::abs(m.correlation(sxy) - target);
    const std::size_t budget = params.max_proposals_per_edge * edges.size();
    const double initial_temperature = 1.0 / static_cast<double>(edges.size());
    for (std::size_t step = 0; step < budget && distance > params.stop_tolerance; ++step) {
      auto& e1 = edges[rng.index(edges.size())];
      auto& e2 = edges[rng.index(edges.size())];
      const NodeId a = e1.left, x = e1.right, b = e2.left, y = e2.right;
      if (a == b || x == y || present.contains(key(a, y)) || present.contains(key(b, x))) continue;
      const double delta = -(lx[a] - lx[b]) * (ly[x] - ly[y]);
      const double proposed = std::abs(m.correlation(sxy + delta) - target);
      const double temperature =
          initial_temperature * (1.0 - static_cast<double>(step) / static_cast<double>(budget));
      if (proposed > distance && rng.unit() >= std::exp(-(proposed - distance) / temperature)) continue;
      present.erase(key(a, x));
      present.erase(key(b, y));
      present.insert(key(a, y));
      present.insert(key(b, x));
      e1.right = y;
      e2.right = x;
      sxy += delta;
      distance = proposed;
    }
  }

  std::vector<std::string> left_labels(params.n_left), right_labels(params.n_right);
  for (std::size_t i = 0; i < params.n_left; ++i) left_labels[i] = padded('u', i, params.n_left);
  for (std::size_t i = 0; i < params.n_right; ++i) right_labels[i] = padded('d', i, params.n_right);
  result.graph = BipartiteGraph(std::move(left_labels), std::move(right_labels), std::move(edges));
  result.disassortativity = log_degree_pearson(result.graph);

  if (defined && result.disassortativity &&
      std::abs(*result.disassortativity - params.target_disassortativity) > params.accept_tolerance) {
    throw ConvergenceError("rewiring reached log-degree correlation " +
                               std::to_string(*result.disassortativity) + ", target " +
                               std::to_string(params.target_disassortativity),
                           *result.disassortativity);
  }
  return result;
}

BipartiteGraph generate_synthetic(const SyntheticParams& params) {
  return generate_synthetic_detailed(params).graph;
}

}  // namespace netproj
