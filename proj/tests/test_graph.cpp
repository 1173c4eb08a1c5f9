#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spindex/graph.hpp"

using namespace spindex;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

}  // namespace

TEST_CASE("from_edges canonicalizes and validates") {
  const Graph p3 = Graph::from_edges(3, {{2, 1}, {1, 0}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.edges()[0] == Edge{0, 1});
  CHECK(p3.edges()[1] == Edge{1, 2});
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.max_degree() == 2);

  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
}

TEST_CASE("from_sorted_edges requires strict order") {
  CHECK_NOTHROW(Graph::from_sorted_edges(4, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_THROWS_AS(Graph::from_sorted_edges(4, {{0, 2}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_sorted_edges(4, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("edgeless graphs are allowed") {
  const Graph g = Graph::from_edges(5, {});
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);
  CHECK(g.max_degree() == 0);
}

TEST_CASE("edge list basic parse") {
  const Graph g = parse("0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("edge list vertex-count header") {
  const Graph g = parse("n 5\n0 1\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(4) == 0);
}

TEST_CASE("edge list comments, blanks, and CRLF") {
  const Graph g = parse("# path on three vertices\r\n\r\n0 1   # trailing comment\r\n1 2\r\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse("0 0\n");
    FAIL("expected parse error");
  } catch (const EdgeListParseError& e) {
    CHECK(e.line() == 1);
  }

  // duplicate reported at the later of the two lines, whatever the orientation
  try {
    parse("0 1\n2 3\n1 0\n");
    FAIL("expected parse error");
  } catch (const EdgeListParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  try {
    parse("n 3\n0 5\n");
    FAIL("expected parse error");
  } catch (const EdgeListParseError& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(parse("0 1 2\n"), EdgeListParseError);
  CHECK_THROWS_AS(parse("0\n"), EdgeListParseError);
  CHECK_THROWS_AS(parse("a b\n"), EdgeListParseError);
  CHECK_THROWS_AS(parse("0 -3\n"), EdgeListParseError);
  CHECK_THROWS_AS(parse(""), EdgeListParseError);
  CHECK_THROWS_AS(parse("# just a comment\n"), EdgeListParseError);
}

TEST_CASE("header-only lists give edgeless graphs") {
  const Graph g = parse("n 4\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("vertex count defaults to max id plus one") {
  const Graph g = parse("7 2\n");
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges()[0] == Edge{2, 7});
}
