#include "netproj/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

#include "netproj/error.hpp"
#include "netproj/format.hpp"

namespace netproj {

namespace {

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(delimiter, start);
    fields.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

// Strips a trailing CR; returns false for blank and comment lines.
bool content_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty() || line.front() == '#') return false;
  return line.find_first_not_of(" \t") != std::string::npos;
}

[[noreturn]] void malformed(std::size_t line_number, const std::string& why) {
  throw DataError("line " + std::to_string(line_number) + ": " + why);
}

std::vector<std::string> ordered_ids(const std::map<std::string, NodeId, std::less<>>& ids,
                                     std::map<std::string, NodeId, std::less<>>& index) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& [label, unused] : ids) {
    index[label] = static_cast<NodeId>(out.size());
    out.push_back(label);
  }
  return out;
}

}  // namespace

BipartiteGraph read_bipartite(std::istream& in, const IngestOptions& options) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!content_line(line)) continue;
    const auto fields = split(line, options.delimiter);
    if (fields.size() < 2) malformed(line_number, "expected at least two columns");
    if (fields[0].empty() || fields[1].empty()) malformed(line_number, "empty node id");
    std::uint64_t count = 1;
    if (fields.size() >= 3 && !fields[2].empty()) {
      const auto f = fields[2];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), count);
      if (ec != std::errc() || ptr != f.data() + f.size() || count == 0) {
        malformed(line_number, "count must be a positive integer");
      }
    }
    counts[{std::string(fields[0]), std::string(fields[1])}] += count;
  }

  std::map<std::string, NodeId, std::less<>> left_ids, right_ids;
  for (const auto& [key, count] : counts) {
    if (options.blacklist.contains(key.second) || count < options.min_multiplicity) continue;
    left_ids.emplace(key.first, 0);
    right_ids.emplace(key.second, 0);
  }
  if (left_ids.empty()) throw DataError("empty graph");

  std::map<std::string, NodeId, std::less<>> left_index, right_index;
  auto left_labels = ordered_ids(left_ids, left_index);
  auto right_labels = ordered_ids(right_ids, right_index);
  std::vector<BipartiteEdge> edges;
  for (const auto& [key, count] : counts) {
    if (options.blacklist.contains(key.second) || count < options.min_multiplicity) continue;
    if (count > std::numeric_limits<std::uint32_t>::max()) {
      throw DataError("multiplicity overflow for (" + key.first + ", " + key.second + ")");
    }
    edges.push_back({left_index.at(key.first), right_index.at(key.second),
                     static_cast<std::uint32_t>(count)});
  }
  return BipartiteGraph(std::move(left_labels), std::move(right_labels), std::move(edges));
}

BipartiteGraph ingest_bipartite(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_bipartite(in, options);
}

void write_bipartite(std::ostream& out, const BipartiteGraph& graph, char delimiter) {
  const auto& left = graph.labels(Side::Left);
  const auto& right = graph.labels(Side::Right);
  for (const auto& e : graph.edges()) {
    out << left[e.left] << delimiter << right[e.right] << delimiter << e.multiplicity << '\n';
  }
}

void write_weighted(std::ostream& out, const WeightedGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << graph.label(e.a) << '\t' << graph.label(e.b) << '\t' << format_real(e.weight) << '\n';
  }
}

WeightedGraph read_weighted(std::istream& in, char delimiter) {
  struct Row {
    std::string a, b;
    double weight;
  };
  std::vector<Row> rows;
  std::map<std::string, NodeId, std::less<>> ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!content_line(line)) continue;
    const auto fields = split(line, delimiter);
    if (fields.size() < 3) malformed(line_number, "expected three columns");
    if (fields[0].empty() || fields[1].empty()) malformed(line_number, "empty node id");
    double weight = 0.0;
    const auto f = fields[2];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), weight);
    if (ec != std::errc() || ptr != f.data() + f.size() || !(weight > 0.0) || !std::isfinite(weight)) {
      malformed(line_number, "weight must be a positive number");
    }
    if (fields[0] == fields[1]) malformed(line_number, "self-loop");
    ids.emplace(std::string(fields[0]), 0);
    ids.emplace(std::string(fields[1]), 0);
    rows.push_back({std::string(fields[0]), std::string(fields[1]), weight});
  }
  std::map<std::string, NodeId, std::less<>> index;
  auto labels = ordered_ids(ids, index);
  std::vector<WeightedEdge> edges;
  edges.reserve(rows.size());
  for (const auto& r : rows) edges.push_back({index.at(r.a), index.at(r.b), r.weight});
  return WeightedGraph(std::move(labels), std::move(edges));
}

WeightedGraph read_weighted(const std::filesystem::path& path, char delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_weighted(in, delimiter);
}

}  // namespace netproj
