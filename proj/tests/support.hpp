#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "netproj/bipartite_graph.hpp"
#include "netproj/random.hpp"
#include "netproj/weighted_graph.hpp"

namespace netproj::testing {

// Zero-padded so that label order matches index order.
inline std::vector<std::string> names(char prefix, std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string digits = std::to_string(i);
    out.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

// Erdős–Rényi style bipartite graph; every node keeps at least one edge.
inline BipartiteGraph random_bipartite(Rng& rng, std::size_t max_left, std::size_t max_right,
                                       double p) {
  const std::size_t nl = 1 + rng.index(max_left);
  const std::size_t nr = 1 + rng.index(max_right);
  std::vector<std::vector<bool>> on(nl, std::vector<bool>(nr, false));
  for (auto& row : on)
    for (std::size_t j = 0; j < nr; ++j) row[j] = rng.unit() < p;
  for (std::size_t i = 0; i < nl; ++i) on[i][rng.index(nr)] = true;
  for (std::size_t j = 0; j < nr; ++j) on[rng.index(nl)][j] = true;
  std::vector<BipartiteEdge> edges;
  for (NodeId i = 0; i < nl; ++i)
    for (NodeId j = 0; j < nr; ++j)
      if (on[i][j]) edges.push_back({i, j, 1 + static_cast<std::uint32_t>(rng.index(3))});
  return BipartiteGraph(names('u', nl), names('d', nr), std::move(edges));
}

inline Eigen::MatrixXd dense_biadjacency(const BipartiteGraph& g, Side side) {
  const auto rows = static_cast<Eigen::Index>(g.node_count(side));
  const auto cols = static_cast<Eigen::Index>(g.node_count(opposite(side)));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& e : g.edges()) {
    if (side == Side::Left) b(e.left, e.right) = 1.0;
    else b(e.right, e.left) = 1.0;
  }
  return b;
}

inline Eigen::MatrixXd dense_weights(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) w(e.a, e.b) = w(e.b, e.a) = e.weight;
  return w;
}

inline WeightedGraph unit_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  std::vector<WeightedEdge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, 1.0});
  return WeightedGraph(names('v', n), std::move(edges));
}

inline WeightedGraph star(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return unit_graph(n, pairs);
}

inline WeightedGraph cycle(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 0; v < n; ++v) pairs.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return unit_graph(n, pairs);
}

inline WeightedGraph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return unit_graph(n, pairs);
}

inline WeightedGraph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return unit_graph(n, pairs);
}

// Betweenness by listing every shortest path between every pair, for graphs
// of at most 16 nodes given as adjacency bitmasks. Normalised like
// netproj::betweenness.
class PathOracle {
 public:
  explicit PathOracle(std::vector<std::uint32_t> adjacency)
      : adj_(std::move(adjacency)), n_(adj_.size()), dist_(n_ * n_, kFar) {
    for (std::size_t s = 0; s < n_; ++s) {
      dist_[s * n_ + s] = 0;
      std::vector<std::size_t> frontier{s};
      for (int d = 1; !frontier.empty(); ++d) {
        std::vector<std::size_t> next;
        for (auto v : frontier)
          for (std::size_t w = 0; w < n_; ++w)
            if ((adj_[v] >> w & 1u) && dist_[s * n_ + w] == kFar) {
              dist_[s * n_ + w] = d;
              next.push_back(w);
            }
        frontier = std::move(next);
      }
    }
  }

  Eigen::VectorXd betweenness() {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = s + 1; t < n_; ++t) {
        if (dist_[s * n_ + t] == kFar) continue;
        paths_ = 0;
        through_.assign(n_, 0);
        trail_.assign(1, s);
        walk(s, t);
        for (std::size_t v = 0; v < n_; ++v)
          if (v != s && v != t) c(static_cast<Eigen::Index>(v)) += double(through_[v]) / double(paths_);
      }
    if (n_ >= 3) c /= double(n_ - 1) * double(n_ - 2) / 2.0;
    return c;
  }

 private:
  static constexpr int kFar = 1 << 20;

  void walk(std::size_t v, std::size_t t) {
    if (v == t) {
      ++paths_;
      for (auto x : trail_) ++through_[x];
      return;
    }
    for (std::size_t w = 0; w < n_; ++w) {
      if (!(adj_[v] >> w & 1u)) continue;
      if (dist_[w * n_ + t] != dist_[v * n_ + t] - 1) continue;
      trail_.push_back(w);
      walk(w, t);
      trail_.pop_back();
    }
  }

  std::vector<std::uint32_t> adj_;
  std::size_t n_;
  std::vector<int> dist_;
  std::uint64_t paths_ = 0;
  std::vector<std::uint64_t> through_;
  std::vector<std::size_t> trail_;
};

inline std::vector<std::uint32_t> adjacency_bits(const WeightedGraph& g) {
  std::vector<std::uint32_t> bits(g.node_count(), 0);
  for (const auto& e : g.edges()) {
    bits[e.a] |= 1u << e.b;
    bits[e.b] |= 1u << e.a;
  }
  return bits;
}

// Dense projection oracles over the biadjacency B (rows: projected side).
inline Eigen::MatrixXd oracle_simple(const Eigen::MatrixXd& b) {
  Eigen::MatrixXd w = b * b.transpose();
  w.diagonal().setZero();
  return w;
}

inline Eigen::MatrixXd oracle_hyperbolic(const Eigen::MatrixXd& b) {
  const Eigen::VectorXd inv_other = b.colwise().sum().transpose().cwiseInverse();
  Eigen::MatrixXd w = b * inv_other.asDiagonal() * b.transpose();
  w.diagonal().setZero();
  return w;
}

inline Eigen::MatrixXd oracle_transition(const Eigen::MatrixXd& b) {
  const Eigen::VectorXd inv_other = b.colwise().sum().transpose().cwiseInverse();
  const Eigen::VectorXd inv_self = b.rowwise().sum().cwiseInverse();
  return inv_self.asDiagonal() * b * inv_other.asDiagonal() * b.transpose();
}

inline Eigen::MatrixXd oracle_probs(const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd p = oracle_transition(b);
  Eigen::MatrixXd w = 0.5 * (p + p.transpose());
  w.diagonal().setZero();
  return w;
}

// Members of the largest component of the projection (smallest id on ties).
inline std::vector<Eigen::Index> largest_component(const Eigen::MatrixXd& b) {
  const Eigen::Index n = b.rows();
  const Eigen::MatrixXd linked = b * b.transpose();
  std::vector<Eigen::Index> label(static_cast<std::size_t>(n), -1);
  std::vector<Eigen::Index> best;
  for (Eigen::Index s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<Eigen::Index> members{s};
    label[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Eigen::Index w = 0; w < n; ++w)
        if (label[w] < 0 && linked(members[i], w) > 0) {
          label[w] = s;
          members.push_back(w);
        }
    if (members.size() > best.size()) best = members;
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Stationary vector of the two-step walk on the largest component from the
// dominant left eigenvector of a dense eigensolver; zero elsewhere.
inline Eigen::VectorXd oracle_stationary(const Eigen::MatrixXd& b) {
  const auto members = largest_component(b);
  const auto m = static_cast<Eigen::Index>(members.size());
  const Eigen::MatrixXd p = oracle_transition(b);
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = p(members[i], members[j]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(sub.transpose());
  Eigen::Index top = 0;
  solver.eigenvalues().real().maxCoeff(&top);
  Eigen::VectorXd v = solver.eigenvectors().col(top).real();
  v /= v.sum();
  Eigen::VectorXd pi = Eigen::VectorXd::Zero(b.rows());
  for (Eigen::Index i = 0; i < m; ++i) pi(members[i]) = v(i);
  return pi;
}

inline double max_relative_error(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < got.rows(); ++i)
    for (Eigen::Index j = 0; j < got.cols(); ++j) {
      const double scale = std::max(std::abs(want(i, j)), 1e-300);
      const double err = got(i, j) == want(i, j) ? 0.0 : std::abs(got(i, j) - want(i, j)) / scale;
      worst = std::max(worst, err);
    }
  return worst;
}

}  // namespace netproj::testing
