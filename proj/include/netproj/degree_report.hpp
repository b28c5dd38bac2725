#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "netproj/bipartite_graph.hpp"

namespace netproj {

// P(K >= degree) for each distinct degree, ascending.
struct CcdfPoint {
  std::size_t degree;
  double fraction;
};

// Edges joining a left node with degree in [2^left_bin, 2^(left_bin+1)) to a
// right node with degree in [2^right_bin, 2^(right_bin+1)).
struct JointDegreeBin {
  int left_bin;
  int right_bin;
  std::size_t edges;
};

struct DegreeReport {
  std::vector<std::size_t> left_degrees;
  std::vector<std::size_t> right_degrees;
  std::vector<CcdfPoint> left_ccdf;
  std::vector<CcdfPoint> right_ccdf;
  std::vector<JointDegreeBin> joint_histogram;
  // Correlation of (ln deg(left), ln deg(right)) over edges. nullopt when
  // either side is constant over the edge list.
  std::optional<double> pearson;
  std::optional<double> spearman;
};

DegreeReport degree_report(const BipartiteGraph& graph);

// Pearson correlation of logged endpoint degrees only.
std::optional<double> log_degree_pearson(const BipartiteGraph& graph);

// left_degrees.csv, right_degrees.csv, left_ccdf.csv, right_ccdf.csv,
// joint_degree.csv and degree_summary.json under `directory`.
void write_degree_report(const DegreeReport& report, const BipartiteGraph& graph,
                         const std::filesystem::path& directory);

}  // namespace netproj
