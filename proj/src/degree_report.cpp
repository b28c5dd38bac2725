#include "netproj/degree_report.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <map>

#include <Eigen/Core>
#include <json.hpp>

#include "netproj/error.hpp"
#include "netproj/format.hpp"
#include "netproj/stats.hpp"

namespace netproj {

namespace {

std::vector<std::size_t> degrees(const BipartiteGraph& g, Side side) {
  std::vector<std::size_t> out(g.node_count(side));
  for (NodeId v = 0; v < out.size(); ++v) out[v] = g.degree(side, v);
  return out;
}

std::vector<CcdfPoint> ccdf(const std::vector<std::size_t>& degrees) {
  std::map<std::size_t, std::size_t> histogram;
  for (auto d : degrees) ++histogram[d];
  std::vector<CcdfPoint> out;
  std::size_t at_least = degrees.size();
  for (const auto& [d, count] : histogram) {
    out.push_back({d, static_cast<double>(at_least) / static_cast<double>(degrees.size())});
    at_least -= count;
  }
  return out;
}

int log2_bin(std::size_t degree) { return static_cast<int>(std::bit_width(degree)) - 1; }

std::pair<Eigen::VectorXd, Eigen::VectorXd> logged_endpoint_degrees(const BipartiteGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.edge_count());
  Eigen::VectorXd x(n), y(n);
  Eigen::Index i = 0;
  for (const auto& e : g.edges()) {
    x(i) = std::log(static_cast<double>(g.degree(Side::Left, e.left)));
    y(i) = std::log(static_cast<double>(g.degree(Side::Right, e.right)));
    ++i;
  }
  return {x, y};
}

void write_degrees(const std::filesystem::path& path, const std::vector<std::string>& labels,
                   const std::vector<std::size_t>& degrees) {
  std::ofstream out(path);
  out << "node,degree\n";
  for (std::size_t v = 0; v < degrees.size(); ++v) out << csv_field(labels[v]) << ',' << degrees[v] << '\n';
}

void write_ccdf(const std::filesystem::path& path, const std::vector<CcdfPoint>& points) {
  std::ofstream out(path);
  out << "degree,ccdf\n";
  for (const auto& p : points) out << p.degree << ',' << format_real(p.fraction) << '\n';
}

}  // namespace

std::optional<double> log_degree_pearson(const BipartiteGraph& graph) {
  const auto [x, y] = logged_endpoint_degrees(graph);
  return pearson(x, y);
}

DegreeReport degree_report(const BipartiteGraph& graph) {
  if (graph.edge_count() == 0) throw DataError("empty graph");
  DegreeReport report;
  report.left_degrees = degrees(graph, Side::Left);
  report.right_degrees = degrees(graph, Side::Right);
  report.left_ccdf = ccdf(report.left_degrees);
  report.right_ccdf = ccdf(report.right_degrees);

  std::map<std::pair<int, int>, std::size_t> joint;
  for (const auto& e : graph.edges()) {
    ++joint[{log2_bin(report.left_degrees[e.left]), log2_bin(report.right_degrees[e.right])}];
  }
  for (const auto& [bins, count] : joint) report.joint_histogram.push_back({bins.first, bins.second, count});

  const auto [x, y] = logged_endpoint_degrees(graph);
  report.pearson = pearson(x, y);
  report.spearman = spearman(x, y);
  return report;
}

void write_degree_report(const DegreeReport& report, const BipartiteGraph& graph,
                         const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  write_degrees(directory / "left_degrees.csv", graph.labels(Side::Left), report.left_degrees);
  write_degrees(directory / "right_degrees.csv", graph.labels(Side::Right), report.right_degrees);
  write_ccdf(directory / "left_ccdf.csv", report.left_ccdf);
  write_ccdf(directory / "right_ccdf.csv", report.right_ccdf);
  {
    std::ofstream out(directory / "joint_degree.csv");
    out << "left_bin_lo,left_bin_hi,right_bin_lo,right_bin_hi,edges\n";
    for (const auto& b : report.joint_histogram) {
      out << (std::size_t{1} << b.left_bin) << ',' << (std::size_t{2} << b.left_bin) << ','
          << (std::size_t{1} << b.right_bin) << ',' << (std::size_t{2} << b.right_bin) << ','
          << b.edges << '\n';
    }
  }
  auto correlation = [](const std::optional<double>& v) -> nlohmann::json {
    if (!v) return "undefined";
    return *v;
  };
  nlohmann::ordered_json summary;
  summary["left_nodes"] = graph.node_count(Side::Left);
  summary["right_nodes"] = graph.node_count(Side::Right);
  summary["edges"] = graph.edge_count();
  summary["total_multiplicity"] = graph.total_multiplicity();
  auto side_summary = [](const std::vector<std::size_t>& d) {
    std::size_t max = 0, sum = 0;
    for (auto k : d) {
      max = std::max(max, k);
      sum += k;
    }
    nlohmann::ordered_json j;
    j["max_degree"] = max;
    j["mean_degree"] = d.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(d.size());
    return j;
  };
  summary["left"] = side_summary(report.left_degrees);
  summary["right"] = side_summary(report.right_degrees);
  summary["log_degree_pearson"] = correlation(report.pearson);
  summary["log_degree_spearman"] = correlation(report.spearman);
  std::ofstream(directory / "degree_summary.json") << summary.dump(2) << '\n';
}

}  // namespace netproj
