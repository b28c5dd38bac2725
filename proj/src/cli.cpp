#include "netproj/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "netproj/backboning.hpp"
#include "netproj/degree_report.hpp"
#include "netproj/edge_list_io.hpp"
#include "netproj/error.hpp"
#include "netproj/format.hpp"
#include "netproj/metrics.hpp"
#include "netproj/projection.hpp"
#include "netproj/strategy_lab.hpp"
#include "netproj/synthetic.hpp"

namespace netproj {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buffer[1 << 16];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buffer, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string out_dir = ".";
  std::string config_path;
  json config = json::object();
};

struct IngestFlags {
  std::string delimiter = "\t";
  std::vector<std::string> blacklist;
  std::uint32_t min_multiplicity = 1;
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& flags) {
  cmd->add_option("--delimiter", flags.delimiter, "Column delimiter (default: tab)");
  cmd->add_option("--blacklist", flags.blacklist, "Right-side ids to drop")->delimiter(',');
  cmd->add_option("--min-multiplicity", flags.min_multiplicity, "Drop edges seen fewer times");
}

char delimiter_of(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) throw UsageError("delimiter must be a single character");
  return text[0];
}

IngestOptions to_ingest_options(const IngestFlags& flags) {
  IngestOptions options;
  options.delimiter = delimiter_of(flags.delimiter);
  options.blacklist.insert(flags.blacklist.begin(), flags.blacklist.end());
  options.min_multiplicity = flags.min_multiplicity;
  return options;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  return out;
}

template <typename T>
void from_config(const json& config, const char* key, CLI::Option* flag, T& target) {
  if ((flag == nullptr || flag->count() == 0) && config.contains(key)) {
    try {
      target = config.at(key).get<T>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("config key '") + key + "': " + e.what());
    }
  }
}

// Relabels g into the node universe `labels` (a superset of g's labels).
WeightedGraph into_universe(const WeightedGraph& g, const Labels& labels) {
  std::map<std::string, NodeId, std::less<>> index;
  for (NodeId v = 0; v < labels->size(); ++v) index.emplace((*labels)[v], v);
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({index.at(g.label(e.a)), index.at(g.label(e.b)), e.weight});
  return WeightedGraph(labels, std::move(edges));
}

// ---- ingest-stats --------------------------------------------------------

struct IngestStatsArgs {
  std::string input;
  IngestFlags ingest;
};

int cmd_ingest_stats(const GlobalOptions& global, const IngestStatsArgs& args, std::ostream& out) {
  const BipartiteGraph g = ingest_bipartite(args.input, to_ingest_options(args.ingest));
  const DegreeReport report = degree_report(g);
  write_degree_report(report, g, global.out_dir);
  auto corr = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("undefined"); };
  out << "left_nodes\t" << g.node_count(Side::Left) << '\n'
      << "right_nodes\t" << g.node_count(Side::Right) << '\n'
      << "edges\t" << g.edge_count() << '\n'
      << "total_multiplicity\t" << g.total_multiplicity() << '\n'
      << "log_degree_pearson\t" << corr(report.pearson) << '\n'
      << "log_degree_spearman\t" << corr(report.spearman) << '\n';
  return kExitOk;
}

// ---- simgen --------------------------------------------------------------

struct SimgenArgs {
  SyntheticParams params;
  std::string output;
};

void add_synthetic_flags(CLI::App* cmd, SyntheticParams& params) {
  cmd->add_option("--n-left", params.n_left, "Left-side node count");
  cmd->add_option("--n-right", params.n_right, "Right-side node count");
  cmd->add_option("--left-exponent", params.left_exponent, "Left degree power-law exponent");
  cmd->add_option("--right-exponent", params.right_exponent, "Right degree power-law exponent");
  cmd->add_option("--target", params.target_disassortativity, "Target log-degree correlation");
}

int cmd_simgen(const GlobalOptions& global, SimgenArgs args, std::ostream& out) {
  args.params.seed = global.seed;
  const SyntheticGraph result = generate_synthetic_detailed(args.params);
  const fs::path path = args.output.empty() ? fs::path(global.out_dir) / "synthetic.tsv" : fs::path(args.output);
  auto file = open_output(path);
  write_bipartite(file, result.graph);
  out << "wrote " << path.string() << ": " << result.graph.node_count(Side::Left) << " left, "
      << result.graph.node_count(Side::Right) << " right, " << result.graph.edge_count()
      << " edges, log-degree correlation "
      << (result.disassortativity ? format_real(*result.disassortativity) : "undefined") << '\n';
  return kExitOk;
}

// ---- project -------------------------------------------------------------

struct ProjectArgs {
  std::string input;
  std::string method;
  std::string side = "right";
  double tolerance = ProjectionSpec{}.ycn_tolerance;
  std::size_t max_iterations = ProjectionSpec{}.ycn_max_iterations;
  std::string output;
  IngestFlags ingest;
};

int cmd_project(const GlobalOptions& global, const ProjectArgs& args, std::ostream& out) {
  const BipartiteGraph g = ingest_bipartite(args.input, to_ingest_options(args.ingest));
  const ProjectionSpec spec{projection_from_string(args.method), side_from_string(args.side),
                            args.tolerance, args.max_iterations};
  const Projection projection = project(g, spec);
  const fs::path path = args.output.empty()
                            ? fs::path(global.out_dir) / ("projection_" + args.method + "_" + args.side + ".tsv")
                            : fs::path(args.output);
  {
    auto file = open_output(path);
    write_weighted(file, projection.graph);
  }
  nlohmann::ordered_json sidecar;
  sidecar["method"] = args.method;
  sidecar["side"] = args.side;
  sidecar["nodes"] = projection.graph.node_count();
  sidecar["edges"] = projection.graph.edge_count();
  if (projection.ycn) {
    sidecar["ycn"] = {{"tolerance", spec.ycn_tolerance},
                      {"iterations", projection.ycn->iterations},
                      {"residual", projection.ycn->residual},
                      {"component_size", projection.ycn->component_size}};
  }
  open_output(path.string() + ".json") << sidecar.dump(2) << '\n';
  out << "wrote " << path.string() << ": " << projection.graph.edge_count() << " edges\n";
  return kExitOk;
}

// ---- backbone ------------------------------------------------------------

struct BackboneArgs {
  std::string input;
  std::string method;
  std::optional<double> cutoff;
  std::optional<double> fraction;
  std::string output;
  std::string scores;
};

int cmd_backbone(const GlobalOptions& global, const BackboneArgs& args, std::ostream& out,
                 std::ostream& err) {
  auto graph = std::make_shared<const WeightedGraph>(read_weighted(fs::path(args.input)));
  const ScoredBackbone scored = score(graph, backbone_from_string(args.method));
  double cutoff = 0.0;
  std::optional<ThresholdGrid> grid;
  if (args.fraction) {
    const double f[] = {*args.fraction};
    grid = resolve_thresholds(scored, f);
    cutoff = grid->cutoffs.front();
  } else {
    cutoff = *args.cutoff;
  }
  const WeightedGraph backbone = extract(scored, cutoff);
  const fs::path path = args.output.empty() ? fs::path(global.out_dir) / ("backbone_" + args.method + ".tsv")
                                            : fs::path(args.output);
  {
    auto file = open_output(path);
    write_weighted(file, backbone);
  }
  if (!args.scores.empty()) {
    auto file = open_output(args.scores);
    const auto edges = graph->edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      file << graph->label(edges[i].a) << '\t' << graph->label(edges[i].b) << '\t'
           << format_real(edges[i].weight) << '\t' << format_real(scored.scores[i]) << '\n';
    }
  }
  if (grid) {
    nlohmann::ordered_json j;
    j["fractions"] = grid->fractions;
    j["cutoffs"] = grid->cutoffs;
    j["retained_counts"] = grid->retained_counts;
    open_output(path.string() + ".thresholds.json") << j.dump(2) << '\n';
  }
  if (backbone.edge_count() == 0) {
    err << "warning: cutoff " << format_real(cutoff) << " retains no edges\n";
  }
  out << "wrote " << path.string() << ": " << backbone.edge_count() << " of " << graph->edge_count()
      << " edges (cutoff " << format_real(cutoff) << ")\n";
  return kExitOk;
}

// ---- metrics -------------------------------------------------------------

struct MetricsArgs {
  std::string input;
  std::string compare;
};

int cmd_metrics(const GlobalOptions& global, const MetricsArgs& args, std::ostream& out) {
  const WeightedGraph g = read_weighted(fs::path(args.input));
  auto na = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("NA"); };
  if (args.compare.empty()) {
    const TopologyReport r = topology_report(g, {global.seed, true});
    out << "node_count,edge_count,coverage,transitivity,modularity,centralization\n"
        << r.node_count << ',' << r.edge_count << ',' << format_real(r.coverage) << ','
        << format_real(r.transitivity) << ',' << na(r.modularity) << ',' << na(r.centralization) << '\n';
    return kExitOk;
  }
  const WeightedGraph other = read_weighted(fs::path(args.compare));
  std::set<std::string> names(g.labels()->begin(), g.labels()->end());
  names.insert(other.labels()->begin(), other.labels()->end());
  const auto universe = std::make_shared<const std::vector<std::string>>(names.begin(), names.end());
  const WeightedGraph a = into_universe(g, universe), b = into_universe(other, universe);
  auto guarded = [](auto&& f) -> std::optional<double> {
    try {
      return f();
    } catch (const UndefinedError&) {
      return std::nullopt;
    }
  };
  const auto cc = cc_similarity(a, b);
  out << "neighbor_jaccard,cc_similarity,cc_distance,degree_correlation\n"
      << na(guarded([&] { return neighbor_jaccard(a, b); })) << ',' << format_real(cc.similarity) << ','
      << format_real(cc.distance) << ',' << na(guarded([&] { return degree_correlation(a, b); })) << '\n';
  return kExitOk;
}

// ---- pipeline ------------------------------------------------------------

struct PipelineArgs {
  std::string input;
  bool synthetic = false;
  SyntheticParams params;
  std::vector<std::string> projections;
  std::vector<std::string> backbonings;
  std::vector<double> fractions;
  std::string side = "right";
  double tolerance = GridConfig{}.ycn_tolerance;
  std::size_t max_iterations = GridConfig{}.ycn_max_iterations;
  IngestFlags ingest;
};

struct PipelineFlags {
  CLI::Option* input = nullptr;
  CLI::Option* synthetic = nullptr;
  CLI::Option* projections = nullptr;
  CLI::Option* backbonings = nullptr;
  CLI::Option* fractions = nullptr;
  CLI::Option* side = nullptr;
  CLI::Option* tolerance = nullptr;
  CLI::Option* max_iterations = nullptr;
};

int cmd_pipeline(const GlobalOptions& global, PipelineArgs args, const PipelineFlags& flags,
                 std::ostream& out) {
  const json& config = global.config;
  from_config(config, "input", flags.input, args.input);
  from_config(config, "projections", flags.projections, args.projections);
  from_config(config, "backbonings", flags.backbonings, args.backbonings);
  from_config(config, "fractions", flags.fractions, args.fractions);
  from_config(config, "side", flags.side, args.side);
  if (config.contains("ycn")) {
    from_config(config.at("ycn"), "tolerance", flags.tolerance, args.tolerance);
    from_config(config.at("ycn"), "max_iterations", flags.max_iterations, args.max_iterations);
  }
  if (config.contains("blacklist")) from_config(config, "blacklist", nullptr, args.ingest.blacklist);
  if (flags.synthetic->count() == 0 && config.contains("synthetic")) {
    args.synthetic = true;
    const json& s = config.at("synthetic");
    from_config(s, "n_left", nullptr, args.params.n_left);
    from_config(s, "n_right", nullptr, args.params.n_right);
    from_config(s, "left_exponent", nullptr, args.params.left_exponent);
    from_config(s, "right_exponent", nullptr, args.params.right_exponent);
    from_config(s, "target_disassortativity", nullptr, args.params.target_disassortativity);
  }
  if (args.input.empty() == !args.synthetic) {
    throw UsageError("pipeline needs exactly one of --input or --synthetic");
  }

  GridConfig grid;
  if (!args.projections.empty()) {
    grid.projections.clear();
    for (const auto& p : args.projections) grid.projections.push_back(projection_from_string(p));
  }
  if (!args.backbonings.empty()) {
    grid.backbonings.clear();
    for (const auto& b : args.backbonings) grid.backbonings.push_back(backbone_from_string(b));
  }
  if (!args.fractions.empty()) grid.fractions = args.fractions;
  grid.side = side_from_string(args.side);
  grid.ycn_tolerance = args.tolerance;
  grid.ycn_max_iterations = args.max_iterations;
  grid.seed = global.seed;
  grid.workers = global.workers;

  BipartiteGraph graph;
  if (args.synthetic) {
    args.params.seed = global.seed;
    graph = generate_synthetic(args.params);
  } else {
    graph = ingest_bipartite(args.input, to_ingest_options(args.ingest));
  }
  const auto runs = run_grid(graph, grid);
  const fs::path dir(global.out_dir);
  const auto files = write_grid_outputs(dir, runs, global.seed);

  nlohmann::ordered_json manifest;
  manifest["seed"] = global.seed;
  manifest["runs"] = runs.size();
  manifest["files"] = nlohmann::ordered_json::array();
  for (const auto& name : files) {
    manifest["files"].push_back({{"name", name},
                                 {"bytes", fs::file_size(dir / name)},
                                 {"sha256", sha256_file((dir / name).string())}});
  }
  open_output(dir / "manifest.json") << manifest.dump(2) << '\n';
  out << "wrote " << runs.size() << " runs and " << files.size() + 1 << " files to " << dir.string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite projection and backboning strategy toolkit", "netproj"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for every random choice");
  app.add_option("--workers", global.workers, "Worker threads for the grid (0: all cores)");
  app.add_option("--out-dir", global.out_dir, "Output directory");
  app.add_option("--config", global.config_path, "JSON configuration file");

  IngestStatsArgs stats_args;
  auto* stats = app.add_subcommand("ingest-stats", "Degree statistics of a bipartite edge list");
  stats->add_option("input", stats_args.input, "Bipartite edge list")->required();
  add_ingest_flags(stats, stats_args.ingest);

  SimgenArgs simgen_args;
  auto* simgen = app.add_subcommand("simgen", "Generate a disassortative synthetic bipartite graph");
  add_synthetic_flags(simgen, simgen_args.params);
  simgen->add_option("-o,--output", simgen_args.output, "Output edge list");

  ProjectArgs project_args;
  auto* proj = app.add_subcommand("project", "Project a bipartite graph onto one side");
  proj->add_option("input", project_args.input, "Bipartite edge list")->required();
  proj->add_option("--method", project_args.method, "simple | hyperbolic | probs | ycn")
      ->required()
      ->check(CLI::IsMember({"simple", "hyperbolic", "probs", "ycn"}));
  proj->add_option("--side", project_args.side, "left | right")->check(CLI::IsMember({"left", "right"}));
  proj->add_option("--tol", project_args.tolerance, "YCN convergence tolerance");
  proj->add_option("--max-iter", project_args.max_iterations, "YCN iteration bound");
  proj->add_option("-o,--output", project_args.output, "Output weighted edge list");
  add_ingest_flags(proj, project_args.ingest);

  BackboneArgs backbone_args;
  auto* back = app.add_subcommand("backbone", "Score and threshold a weighted edge list");
  back->add_option("input", backbone_args.input, "Weighted edge list")->required();
  back->add_option("--method", backbone_args.method, "naive | df | nc")
      ->required()
      ->check(CLI::IsMember({"naive", "df", "nc"}));
  auto* cutoff = back->add_option("--cutoff", backbone_args.cutoff, "Keep edges scoring at least this");
  auto* fraction = back->add_option("--fraction", backbone_args.fraction, "Share of edges to keep")
                       ->check(CLI::Range(0.0, 1.0));
  cutoff->excludes(fraction);
  back->add_option("-o,--output", backbone_args.output, "Output backbone edge list");
  back->add_option("--scores", backbone_args.scores, "Also write every edge with its score");

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "Topology report, or similarities of two graphs");
  metrics->add_option("input", metrics_args.input, "Weighted edge list")->required();
  metrics->add_option("--compare", metrics_args.compare, "Second graph to compare against");

  PipelineArgs pipeline_args;
  PipelineFlags pipeline_flags;
  auto* pipeline = app.add_subcommand("pipeline", "Run the projection x backboning x threshold grid");
  pipeline_flags.input = pipeline->add_option("--input", pipeline_args.input, "Bipartite edge list");
  pipeline_flags.synthetic = pipeline->add_flag("--synthetic", pipeline_args.synthetic, "Use the synthetic generator");
  add_synthetic_flags(pipeline, pipeline_args.params);
  pipeline_flags.projections = pipeline->add_option("--projections", pipeline_args.projections)
                                   ->delimiter(',')
                                   ->check(CLI::IsMember({"simple", "hyperbolic", "probs", "ycn"}));
  pipeline_flags.backbonings = pipeline->add_option("--backbonings", pipeline_args.backbonings)
                                   ->delimiter(',')
                                   ->check(CLI::IsMember({"naive", "df", "nc"}));
  pipeline_flags.fractions = pipeline->add_option("--fractions", pipeline_args.fractions)->delimiter(',');
  pipeline_flags.side = pipeline->add_option("--side", pipeline_args.side)->check(CLI::IsMember({"left", "right"}));
  pipeline_flags.tolerance = pipeline->add_option("--tol", pipeline_args.tolerance, "YCN convergence tolerance");
  pipeline_flags.max_iterations = pipeline->add_option("--max-iter", pipeline_args.max_iterations, "YCN iteration bound");
  add_ingest_flags(pipeline, pipeline_args.ingest);

  std::vector<const char*> argv{"netproj"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!global.config_path.empty()) {
      std::ifstream in(global.config_path);
      if (!in) throw UsageError("cannot open config '" + global.config_path + "'");
      try {
        global.config = json::parse(in);
      } catch (const json::exception& e) {
        throw UsageError(std::string("invalid config: ") + e.what());
      }
      auto* seed_flag = app.get_option("--seed");
      auto* workers_flag = app.get_option("--workers");
      auto* out_flag = app.get_option("--out-dir");
      from_config(global.config, "seed", seed_flag, global.seed);
      from_config(global.config, "workers", workers_flag, global.workers);
      from_config(global.config, "out_dir", out_flag, global.out_dir);
    }
    if (*stats) return cmd_ingest_stats(global, stats_args, out);
    if (*simgen) return cmd_simgen(global, simgen_args, out);
    if (*proj) return cmd_project(global, project_args, out);
    if (*back) {
      if (!backbone_args.cutoff && !backbone_args.fraction) {
        throw UsageError("backbone needs --cutoff or --fraction");
      }
      return cmd_backbone(global, backbone_args, out, err);
    }
    if (*metrics) return cmd_metrics(global, metrics_args, out);
    if (*pipeline) return cmd_pipeline(global, pipeline_args, pipeline_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace netproj
