#include "netproj/projection.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "netproj/error.hpp"
#include "netproj/format.hpp"

namespace netproj {

std::string_view to_string(ProjectionMethod method) {
  switch (method) {
    case ProjectionMethod::Simple: return "simple";
    case ProjectionMethod::Hyperbolic: return "hyperbolic";
    case ProjectionMethod::ProbS: return "probs";
    case ProjectionMethod::YCN: return "ycn";
  }
  return "?";
}

ProjectionMethod projection_from_string(std::string_view name) {
  for (auto m : {ProjectionMethod::Simple, ProjectionMethod::Hyperbolic, ProjectionMethod::ProbS,
                 ProjectionMethod::YCN}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown projection method '" + std::string(name) + "'");
}

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

Eigen::VectorXd inverse_degrees(const SparseMatrix& incidence_rows) {
  Eigen::VectorXd inv(incidence_rows.rows());
  Eigen::VectorXd deg = incidence_rows * Eigen::VectorXd::Ones(incidence_rows.cols());
  for (Eigen::Index i = 0; i < deg.size(); ++i) inv(i) = deg(i) > 0 ? 1.0 / deg(i) : 0.0;
  return inv;
}

Labels side_labels(const BipartiteGraph& graph, Side side) {
  return std::make_shared<const std::vector<std::string>>(graph.labels(side));
}

// B D B^T for the incidence B of `side` and a diagonal D over the opposite side.
SparseMatrix weighted_cooccurrence(const BipartiteGraph& graph, Side side,
                                   const Eigen::VectorXd* other_scale) {
  const SparseMatrix b = graph.incidence(side);
  const SparseMatrix bt = b.transpose();
  if (other_scale == nullptr) return SparseMatrix(b * bt);
  const SparseMatrix scaled = other_scale->asDiagonal() * bt;
  return SparseMatrix(b * scaled);
}

// Largest connected component of the projection, ties to the smallest id.
std::vector<char> largest_component(const BipartiteGraph& graph, Side side) {
  const std::size_t n = graph.node_count(side);
  const std::size_t m = graph.node_count(opposite(side));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (NodeId z = 0; z < m; ++z) {
    const auto nbs = graph.neighbors(opposite(side), z);
    for (std::size_t i = 1; i < nbs.size(); ++i) {
      const auto a = find(nbs[0]), b = find(nbs[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.degree(side, static_cast<NodeId>(v)) > 0) ++size[find(v)];
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    if (size[r] > size[best]) best = r;
  }
  std::vector<char> member(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    member[v] = size[best] > 0 && find(v) == best && graph.degree(side, static_cast<NodeId>(v)) > 0;
  }
  return member;
}

}  // namespace

WeightedGraph project_simple(const BipartiteGraph& graph, Side side) {
  return WeightedGraph::from_symmetric(side_labels(graph, side),
                                       weighted_cooccurrence(graph, side, nullptr));
}

WeightedGraph project_hyperbolic(const BipartiteGraph& graph, Side side) {
  const Eigen::VectorXd inv_other = inverse_degrees(graph.incidence(opposite(side)));
  return WeightedGraph::from_symmetric(side_labels(graph, side),
                                       weighted_cooccurrence(graph, side, &inv_other));
}

SparseMatrix two_step_transition(const BipartiteGraph& graph, Side side) {
  const Eigen::VectorXd inv_other = inverse_degrees(graph.incidence(opposite(side)));
  const Eigen::VectorXd inv_self = inverse_degrees(graph.incidence(side));
  const SparseMatrix hyperbolic = weighted_cooccurrence(graph, side, &inv_other);
  return SparseMatrix(inv_self.asDiagonal() * hyperbolic);
}

WeightedGraph project_probs(const BipartiteGraph& graph, Side side) {
  const SparseMatrix directed = two_step_transition(graph, side);
  const SparseMatrix transposed = directed.transpose();
  const SparseMatrix symmetric = 0.5 * (directed + transposed);
  return WeightedGraph::from_symmetric(side_labels(graph, side), symmetric);
}

YcnProjection project_ycn(const BipartiteGraph& graph, Side side, const ProjectionSpec& spec) {
  if (!(spec.ycn_tolerance > 0.0) || spec.ycn_max_iterations < 1) {
    throw std::invalid_argument("YCN needs a positive tolerance and at least one iteration");
  }
  const std::size_t n = graph.node_count(side);
  const auto member = largest_component(graph, side);

  std::vector<Eigen::Index> local_to_global;
  std::vector<Eigen::Index> global_to_local(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (member[v]) {
      global_to_local[v] = static_cast<Eigen::Index>(local_to_global.size());
      local_to_global.push_back(static_cast<Eigen::Index>(v));
    }
  }
  const auto k = static_cast<Eigen::Index>(local_to_global.size());

  // P restricted to the component; still row-stochastic.
  const SparseMatrix full = two_step_transition(graph, side);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(full.nonZeros()));
  for (Eigen::Index col = 0; col < full.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(full, col); it; ++it) {
      const auto r = global_to_local[static_cast<std::size_t>(it.row())];
      const auto c = global_to_local[static_cast<std::size_t>(it.col())];
      if (r >= 0 && c >= 0) entries.emplace_back(r, c, it.value());
    }
  }
  SparseMatrix p(k, k);
  p.setFromTriplets(entries.begin(), entries.end());
  const Eigen::SparseMatrix<double, Eigen::RowMajor> pt = p.transpose();

  YcnProjection result;
  result.component_size = static_cast<std::size_t>(k);
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(k, k > 0 ? 1.0 / static_cast<double>(k) : 0.0);
  double residual = k > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  std::size_t iterations = 0;
  while (residual >= spec.ycn_tolerance) {
    if (iterations == spec.ycn_max_iterations) {
      throw ConvergenceError("YCN power iteration did not converge in " +
                                 std::to_string(iterations) + " iterations (residual " +
                                 format_real(residual) + ")",
                             residual);
    }
    Eigen::VectorXd next = pt * pi;
    next /= next.sum();
    residual = (next - pi).lpNorm<1>();
    pi.swap(next);
    ++iterations;
  }
  result.iterations = iterations;
  result.residual = k > 1 ? residual : 0.0;

  result.stationary = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < k; ++i) result.stationary(local_to_global[i]) = pi(i);

  const SparseMatrix flow = pi.asDiagonal() * p;
  const SparseMatrix flow_t = flow.transpose();
  const SparseMatrix symmetric = flow + flow_t;
  std::vector<WeightedEdge> edges;
  for (Eigen::Index col = 0; col < symmetric.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(symmetric, col); it; ++it) {
      if (it.row() < it.col() && it.value() > 0.0) {
        edges.push_back({static_cast<NodeId>(local_to_global[it.row()]),
                         static_cast<NodeId>(local_to_global[it.col()]), it.value()});
      }
    }
  }
  result.graph = WeightedGraph(side_labels(graph, side), std::move(edges));
  return result;
}

Projection project(const BipartiteGraph& graph, const ProjectionSpec& spec) {
  switch (spec.method) {
    case ProjectionMethod::Simple: return {project_simple(graph, spec.side), std::nullopt};
    case ProjectionMethod::Hyperbolic: return {project_hyperbolic(graph, spec.side), std::nullopt};
    case ProjectionMethod::ProbS: return {project_probs(graph, spec.side), std::nullopt};
    case ProjectionMethod::YCN: {
      auto ycn = project_ycn(graph, spec.side, spec);
      WeightedGraph g = ycn.graph;
      return {std::move(g), std::move(ycn)};
    }
  }
  throw std::invalid_argument("unknown projection method");
}

}  // namespace netproj
