#include <fstream>

#include <json.hpp>

#include "netproj/format.hpp"
#include "netproj/strategy_lab.hpp"

namespace netproj {

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_real(*v) : "NA"; }

std::string cell(double v) { return std::isnan(v) ? "NA" : format_real(v); }

void write_matrix(const std::filesystem::path& path, const std::vector<std::string>& labels,
                  const Eigen::MatrixXd& values) {
  std::ofstream out(path);
  out << "run";
  for (const auto& l : labels) out << ',' << csv_field(l);
  out << '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    out << csv_field(labels[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < values.cols(); ++j) out << ',' << cell(values(i, j));
    out << '\n';
  }
}

}  // namespace

std::vector<std::string> write_grid_outputs(const std::filesystem::path& directory,
                                            std::span<const StrategyRun> runs, std::uint64_t seed) {
  std::filesystem::create_directories(directory);
  std::vector<std::string> written;

  {
    std::ofstream out(directory / "runs.csv");
    out << "projection,backboning,level,fraction,cutoff,node_count,edge_count,coverage,"
           "transitivity,modularity,centralization\n";
    for (const auto& r : runs) {
      out << to_string(r.projection) << ',' << to_string(r.backboning) << ',' << r.level << ','
          << format_real(r.fraction) << ',' << format_real(r.cutoff) << ',' << r.report.node_count
          << ',' << r.report.edge_count << ',' << format_real(r.report.coverage) << ','
          << format_real(r.report.transitivity) << ',' << cell(r.report.modularity) << ','
          << cell(r.report.centralization) << '\n';
    }
    written.push_back("runs.csv");
  }

  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i > 0 && runs[i].histogram == runs[i - 1].histogram) continue;
    const std::string name = "hist_" + runs[i].strategy() + ".csv";
    std::ofstream out(directory / name);
    const auto& h = *runs[i].histogram;
    out << "kind,bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      out << "bin," << format_real(h.bin_edges[b]) << ',' << format_real(h.bin_edges[b + 1]) << ','
          << h.counts[b] << '\n';
    }
    out << "nonpositive,,," << h.nonpositive << '\n';
    out << "nonfinite,,," << h.nonfinite << '\n';
    written.push_back(name);
  }

  const auto matrices = similarity_matrices(runs);
  for (const auto& m : matrices) {
    const std::string metric(to_string(m.metric));
    write_matrix(directory / ("sim_" + metric + ".csv"), m.labels, m.values);
    written.push_back("sim_" + metric + ".csv");

    const StrategyClustering clustering = cluster_strategies(m, seed);
    nlohmann::ordered_json j;
    j["metric"] = metric;
    j["modularity"] = clustering.modularity;
    j["clusters"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < clustering.clusters.size(); ++c) {
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (auto idx : clustering.clusters[c]) members.push_back(clustering.labels[idx]);
      j["clusters"].push_back({{"id", c + 1}, {"members", members}});
    }
    std::ofstream(directory / ("clusters_" + metric + ".json")) << j.dump(2) << '\n';
    written.push_back("clusters_" + metric + ".json");
  }
  write_matrix(directory / "dist_clustering_coeff.csv", matrices[1].labels, clustering_distance_matrix(runs));
  written.push_back("dist_clustering_coeff.csv");

  {
    std::ofstream out(directory / "centralization.csv");
    out << "projection,backboning,level,fraction,centralization\n";
    for (const auto& c : centralization_grid(runs)) {
      out << to_string(c.projection) << ',' << to_string(c.backboning) << ',' << c.level << ','
          << format_real(c.fraction) << ',' << cell(c.centralization) << '\n';
    }
    written.push_back("centralization.csv");
  }
  std::sort(written.begin(), written.end());
  return written;
}

}  // namespace netproj
