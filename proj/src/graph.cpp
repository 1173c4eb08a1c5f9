#include "spindex/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

namespace spindex {

Graph::Graph(std::int32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  degrees_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++degrees_[e.u];
    ++degrees_[e.v];
  }
  max_degree_ = degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

Graph Graph::from_edges(std::int32_t n, std::vector<Edge> edges) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= static_cast<std::uint32_t>(n))
      throw std::invalid_argument("vertex id " + std::to_string(e.v) + " out of range for n=" +
                                  std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  return Graph(n, std::move(edges));
}

Graph Graph::from_sorted_edges(std::int32_t n, std::vector<Edge> edges) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= e.v || e.v >= static_cast<std::uint32_t>(n))
      throw std::invalid_argument("edge list is not canonical");
    if (i > 0 && !(edges[i - 1] < e))
      throw std::invalid_argument("edge list is not sorted and unique");
  }
  return Graph(n, std::move(edges));
}

namespace {

struct PendingEdge {
  std::uint32_t u;
  std::uint32_t v;
  int line;
};

std::uint32_t parse_vertex_id(std::string_view token, int line) {
  std::uint32_t id = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), id);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw EdgeListParseError(line, "expected a vertex id, got '" + std::string(token) + "'");
  return id;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool saw_content = false;
  std::int64_t header_n = -1;
  std::vector<PendingEdge> pending;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank or comment-only line
    if (!(tokens >> b))
      throw EdgeListParseError(line_no, "expected two tokens, got one");
    if (tokens >> extra)
      throw EdgeListParseError(line_no, "trailing token '" + extra + "'");

    if (!saw_content && a == "n") {
      const std::uint32_t count = parse_vertex_id(b, line_no);
      if (count == 0) throw EdgeListParseError(line_no, "vertex count must be positive");
      if (count > static_cast<std::uint32_t>(INT32_MAX))
        throw EdgeListParseError(line_no, "vertex count too large");
      header_n = count;
      saw_content = true;
      continue;
    }
    saw_content = true;

    std::uint32_t u = parse_vertex_id(a, line_no);
    std::uint32_t v = parse_vertex_id(b, line_no);
    if (u == v) throw EdgeListParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (header_n >= 0 && v >= header_n)
      throw EdgeListParseError(line_no, "vertex id " + std::to_string(v) +
                                            " out of range for declared n=" +
                                            std::to_string(header_n));
    pending.push_back({u, v, line_no});
  }

  if (!saw_content) throw EdgeListParseError(line_no, "empty edge list");

  std::sort(pending.begin(), pending.end(), [](const PendingEdge& x, const PendingEdge& y) {
    return std::tie(x.u, x.v, x.line) < std::tie(y.u, y.v, y.line);
  });
  for (std::size_t i = 1; i < pending.size(); ++i)
    if (pending[i].u == pending[i - 1].u && pending[i].v == pending[i - 1].v)
      throw EdgeListParseError(pending[i].line,
                               "duplicate edge " + std::to_string(pending[i].u) + " " +
                                   std::to_string(pending[i].v));

  std::int64_t n = header_n;
  if (n < 0) {
    std::uint32_t max_id = 0;
    for (const PendingEdge& e : pending) max_id = std::max(max_id, e.v);
    n = static_cast<std::int64_t>(max_id) + 1;
  }

  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (const PendingEdge& e : pending) edges.push_back({e.u, e.v});
  return Graph::from_sorted_edges(static_cast<std::int32_t>(n), std::move(edges));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  return load_edge_list(in);
}

}  // namespace spindex
