#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

#include "netproj/bipartite_graph.hpp"
#include "netproj/weighted_graph.hpp"

namespace netproj {

struct IngestOptions {
  char delimiter = '\t';
  std::set<std::string, std::less<>> blacklist;  // right-side ids to drop
  std::uint32_t min_multiplicity = 1;
};

// Rows are `left<d>right[<d>count]`; '#' starts a comment line and blank
// lines are skipped. Repeated rows accumulate multiplicity. Blacklisted right
// nodes and edges below min_multiplicity are removed, then nodes left without
// edges are dropped. Node ids on each side are ordered lexicographically.
//
// Throws DataError naming the line of a malformed row, or "empty graph" when
// nothing survives filtering.
BipartiteGraph read_bipartite(std::istream& in, const IngestOptions& options = {});
BipartiteGraph ingest_bipartite(const std::filesystem::path& path, const IngestOptions& options = {});

// Writes one row per edge with its count column.
void write_bipartite(std::ostream& out, const BipartiteGraph& graph, char delimiter = '\t');

// `node_a<TAB>node_b<TAB>weight` with 12 significant digits.
void write_weighted(std::ostream& out, const WeightedGraph& graph);

// Inverse of write_weighted. Nodes are ordered lexicographically; only nodes
// that appear in some row exist.
WeightedGraph read_weighted(std::istream& in, char delimiter = '\t');
WeightedGraph read_weighted(const std::filesystem::path& path, char delimiter = '\t');

}  // namespace netproj
