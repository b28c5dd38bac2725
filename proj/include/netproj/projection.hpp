#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "netproj/bipartite_graph.hpp"
#include "netproj/weighted_graph.hpp"

namespace netproj {

enum class ProjectionMethod { Simple, Hyperbolic, ProbS, YCN };

std::string_view to_string(ProjectionMethod method);
ProjectionMethod projection_from_string(std::string_view name);

struct ProjectionSpec {
  ProjectionMethod method = ProjectionMethod::Simple;
  Side side = Side::Right;
  double ycn_tolerance = 1e-12;
  std::size_t ycn_max_iterations = 100000;
};

// Weights are built from set-valued neighbourhoods Γ(·); edge multiplicity is
// ignored. Every projection links u, v on `side` iff they share a neighbour.

// w(u,v) = |Γ(u) ∩ Γ(v)|
WeightedGraph project_simple(const BipartiteGraph& graph, Side side);

// w(u,v) = Σ_{z ∈ Γ(u) ∩ Γ(v)} 1 / |Γ(z)|
WeightedGraph project_hyperbolic(const BipartiteGraph& graph, Side side);

// Mean of the two directed resource-allocation weights
// w(u→v) = Σ_{z ∈ Γ(u) ∩ Γ(v)} 1 / (|Γ(u)| |Γ(z)|).
WeightedGraph project_probs(const BipartiteGraph& graph, Side side);

// Row-stochastic two-step walk matrix on `side`, diagonal included:
// P(u,v) = Σ_{z ∈ Γ(u) ∩ Γ(v)} 1 / (|Γ(u)| |Γ(z)|). Rows of isolated nodes are empty.
Eigen::SparseMatrix<double> two_step_transition(const BipartiteGraph& graph, Side side);

struct YcnProjection {
  WeightedGraph graph;
  Eigen::VectorXd stationary;  // over all side nodes, zero outside the component
  std::size_t component_size = 0;
  std::size_t iterations = 0;
  double residual = 0.0;  // L1 change of the last iteration
};

// Stationary distribution of the two-step walk restricted to the largest
// connected component (ties go to the component holding the smallest id),
// found by power iteration from the uniform vector. Edges carry the
// symmetrised stationary flow π(u)P(u,v) + π(v)P(v,u); nodes outside the
// component stay isolated. Throws ConvergenceError with the final residual if
// the L1 change does not drop below the tolerance in time.
YcnProjection project_ycn(const BipartiteGraph& graph, Side side, const ProjectionSpec& spec);

struct Projection {
  WeightedGraph graph;
  std::optional<YcnProjection> ycn;  // diagnostics, YCN only
};

Projection project(const BipartiteGraph& graph, const ProjectionSpec& spec);

}  // namespace netproj
