#include <doctest.h>

#include "corpus.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"

using namespace resgraph;
using namespace resgraph::testing;

namespace {

const char* kExampleText =
    "# -1[g=1] -- -2 -- -2\n"
    "vertex A0 e=-1 g=1\n"
    "vertex A1 e=-2\n"
    "vertex A2 e=-2\n"
    "edge A0 A1\n"
    "edge A1 A2\n";

IntegerMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m(rows.size(), rows.size());
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long x : row) m(r, c++) = Integer(x);
    ++r;
  }
  return m;
}

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("parse the example chain") {
  const ResolutionGraph g = parse_graph(kExampleText);
  REQUIRE(g.size() == 3);
  CHECK(g.vertex(0).self_int == -1);
  CHECK(g.vertex(0).genus == 1);
  CHECK(g.vertex(1).self_int == -2);
  CHECK(g.vertex(2).self_int == -2);
  CHECK(g.multiplicity(0, 1) == 1);
  CHECK(g.multiplicity(1, 2) == 1);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse a single vertex") {
  const ResolutionGraph g = parse_graph("vertex v0 e=-2");
  REQUIRE(g.size() == 1);
  CHECK(g.vertex(0).genus == 0);
  CHECK(g.vertex(0).delta() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("vertex v0 e=-2\nedge v0 v0\n") == 2);
  CHECK(parse_error_line("vertex v0 e=-2\nvertex v0 e=-3\n") == 2);
  CHECK(parse_error_line("vertex v0 e=-2\n\nedge v0 w\n") == 3);
  CHECK(parse_error_line("vertex v0\n") == 1);
  CHECK(parse_error_line("vertex v0 e=-2 colour=red\n") == 1);
  CHECK(parse_error_line("vertex v0 e=x\n") == 1);
  CHECK(parse_error_line("vertex v0 e=-2 g=-1\n") == 1);
  CHECK(parse_error_line("loop v0\n") == 1);
}

TEST_CASE("edges may precede their vertices and repeat") {
  const ResolutionGraph g = parse_graph("edge a b\nedge b a\nvertex a e=-3\nvertex b e=-3\n");
  CHECK(g.multiplicity(0, 1) == 2);
}

TEST_CASE("validate") {
  CHECK(validate(example_chain()).ok());
  const ValidationReport zero = validate(parse_graph("vertex v0 e=0"));
  CHECK(zero.has(ViolationKind::not_negative_definite));
  CHECK(zero.has(ViolationKind::nonnegative_self_intersection));
  const ValidationReport contractible = validate(parse_graph("vertex v0 e=-1"));
  CHECK(contractible.has(ViolationKind::contractible_curve));
  CHECK(validate(parse_graph("vertex v0 e=-2\nvertex v1 e=-2\n")).has(ViolationKind::disconnected));
  CHECK(validate(ResolutionGraph{}).has(ViolationKind::empty_graph));
  CHECK(validate(cusp_vertex(-1)).ok());
}

TEST_CASE("allow-nonminimal downgrades contractible curves") {
  const ResolutionGraph g = parse_graph("vertex v0 e=-1\nvertex v1 e=-3\nedge v0 v1\n");
  CHECK_FALSE(validate(g).ok());
  const ValidationReport r = validate(g, {true});
  CHECK(r.ok());
  CHECK(r.warnings.size() == 1);
  CHECK_THROWS_AS(require_valid(g), InvalidGraph);
}

TEST_CASE("intersection form and canonical degrees") {
  const IntersectionForm f = intersection_form(example_chain());
  CHECK(f.matrix == matrix({{-1, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
  CHECK(f.k_degrees == IntegerVector::Map(std::vector<Integer>{1, 0, 0}.data(), 3));

  const IntersectionForm a1 = intersection_form(a_n(1));
  CHECK(a1.matrix(0, 0) == -2);
  CHECK(a1.k_degrees(0) == 0);

  CHECK(intersection_form(cusp_vertex(-1)).k_degrees(0) == 1);
  // nodes count like cusps
  CHECK(intersection_form(parse_graph("vertex v0 e=-3 nodes=1")).k_degrees(0) == 3);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(matrix({{-1, 1, 0}, {1, -2, 1}, {0, 1, -2}})));
  CHECK_FALSE(is_negative_definite(matrix({{0}})));
  CHECK_FALSE(is_negative_definite(matrix({{-2, 2}, {2, -2}})));
  CHECK_FALSE(is_negative_definite(matrix({{-1, 2}, {2, -1}})));
}

TEST_CASE("adjunction parity holds on the whole corpus") {
  for (const auto& [name, g] : standard_corpus()) {
    CAPTURE(name);
    const IntersectionForm f = intersection_form(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Integer s = f.matrix(i, i) + f.k_degrees(i);
      CHECK(s % 2 == 0);
    }
  }
}

TEST_CASE("serialize round-trips") {
  auto corpus = standard_corpus();
  corpus.push_back({"cycle", cycle_graph({-3, -3, -3})});
  corpus.push_back({"double", parse_graph("vertex a e=-3\nvertex b e=-3\nedge a b\nedge a b\n")});
  for (const auto& [name, g] : corpus) {
    CAPTURE(name);
    const std::string text = serialize(g);
    const ResolutionGraph back = parse_graph(text);
    CHECK(serialize(back) == text);
    CHECK(intersection_form(back).matrix == intersection_form(g).matrix);
    CHECK(intersection_form(back).k_degrees == intersection_form(g).k_degrees);
  }
}
