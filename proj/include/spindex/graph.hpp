#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spindex {

// Unordered edge stored canonically as u < v.
struct Edge {
  std::uint32_t u;
  std::uint32_t v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph: no self-loops, no duplicate edges, 0-based vertex
// ids. Edges are kept sorted lexicographically; degrees are derived once at
// construction.
class Graph {
 public:
  // Canonicalizes, sorts, and validates an arbitrary edge list. Throws
  // std::invalid_argument on self-loops, duplicates, or out-of-range ids.
  static Graph from_edges(std::int32_t n, std::vector<Edge> edges);

  // Fast path for generators that already emit canonical sorted edges; the
  // ordering and uniqueness are still verified in one pass.
  static Graph from_sorted_edges(std::int32_t n, std::vector<Edge> edges);

  std::int32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::int32_t> degrees() const { return degrees_; }
  std::int32_t degree(std::int32_t v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  std::int32_t max_degree() const { return max_degree_; }

 private:
  Graph(std::int32_t n, std::vector<Edge> edges);

  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> degrees_;
  std::int32_t max_degree_ = 0;
};

// Edge-list text format errors carry the 1-based source line.
class EdgeListParseError : public std::runtime_error {
 public:
  EdgeListParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Whitespace-separated edge list: one "u v" pair per line, optional leading
// "n <count>" header line, '#' comments, blank lines, and CRLF all accepted.
// Without a header the vertex count is max id + 1. Self-loops, duplicate
// edges (in either orientation), ids beyond a declared count, and malformed
// tokens raise EdgeListParseError with the offending line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::filesystem::path& path);

}  // namespace spindex
