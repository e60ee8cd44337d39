#include <doctest.h>

#include "corpus.hpp"
#include "resgraph/elliptic.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/invariants.hpp"

using namespace resgraph;
using namespace resgraph::testing;

namespace {

Cycle cyc(std::initializer_list<long> xs) {
  Cycle c(xs.size());
  Eigen::Index i = 0;
  for (long x : xs) c(i++) = Integer(x);
  return c;
}

std::vector<Cycle> members(const EllipticSequence& s) {
  std::vector<Cycle> out;
  for (const auto& m : s.members) out.push_back(m.cycle);
  return out;
}

}  // namespace

TEST_CASE("elliptic sequence of the example chain") {
  const EllipticSequence s = elliptic_sequence(example_chain());
  CHECK(members(s) == std::vector<Cycle>{cyc({1, 1, 1}), cyc({1, 1, 0}), cyc({1, 0, 0})});
  CHECK(s.m() == 2);
  CHECK(s.members[1].support == VertexSet{0, 1});
  CHECK(s.partial_sums.back() == cyc({3, 2, 1}));
  CHECK(s.tail_sums.front() == cyc({3, 2, 1}));
  CHECK(s.minimally_elliptic_cycle() == cyc({1, 0, 0}));
}

TEST_CASE("elliptic sequence of a cuspidal vertex") {
  const EllipticSequence s = elliptic_sequence(cusp_vertex(-1));
  CHECK(members(s) == std::vector<Cycle>{cyc({1})});
  CHECK(s.m() == 0);
}

TEST_CASE("elliptic sequence of the cusp chains") {
  const EllipticSequence s1 = elliptic_sequence(cusp_chain(1));
  CHECK(members(s1) == std::vector<Cycle>{cyc({1, 1}), cyc({1, 0})});
  CHECK(s1.m() == 1);
  for (unsigned m = 0; m <= 4; ++m) {
    const EllipticSequence s = elliptic_sequence(cusp_chain(m));
    CHECK(s.m() == m);
    Cycle zk(m + 1);
    for (unsigned i = 0; i <= m; ++i) zk(i) = Integer(m + 1 - i);
    CHECK(s.tail_sums.front() == zk);
  }
}

TEST_CASE("elliptic sequence preconditions") {
  CHECK_THROWS_AS(elliptic_sequence(a_n(2)), PreconditionError);
  // elliptic, Z_K = (7/5, 4/5)
  CHECK_THROWS_AS(elliptic_sequence(parse_graph("vertex a e=-2 g=1\nvertex b e=-3\nedge a b\n")),
                  PreconditionError);
}

TEST_CASE("minimally elliptic cycle") {
  CHECK(minimally_elliptic_cycle(example_chain()) == cyc({1, 0, 0}));
  CHECK(minimally_elliptic_cycle(cusp_chain(1)) == cyc({1, 0}));
  const ResolutionGraph me = cycle_graph({-3, -3, -3});
  const Cycle e = minimally_elliptic_cycle(me);
  CHECK(e == cyc({1, 1, 1}));
  CHECK(e == fundamental_cycle(me).cycle);
  CHECK(*canonical_cycle(me).integral == e);
}

TEST_CASE("structure dichotomy") {
  const ResolutionGraph ex = example_chain();
  const StructureVerdict a = check_elliptic_structure(ex, intersection_form(ex), cyc({1, 0, 0}));
  CHECK(a.which == StructureCase::distinguished_vertex);
  CHECK(a.distinguished == std::optional<std::size_t>(0));
  CHECK(a.components_checked);
  CHECK(a.rational_components == std::vector<VertexSet>{{1, 2}});

  const ResolutionGraph cv = cusp_vertex(-1);
  const StructureVerdict b = check_elliptic_structure(cv, intersection_form(cv));
  CHECK(b.which == StructureCase::distinguished_vertex);
  CHECK(b.distinguished == std::optional<std::size_t>(0));

  const ResolutionGraph cg = cycle_graph({-3, -3, -3});
  CHECK(check_elliptic_structure(cg, intersection_form(cg)).which == StructureCase::all_smooth_rational);
}

TEST_CASE("chain decomposition for Z^2 = -1") {
  const ResolutionGraph ex = example_chain();
  const IntersectionForm f = intersection_form(ex);
  const ChainDecomposition d = check_chain_structure(ex, f, elliptic_sequence(ex, f));
  CHECK(d.chain == std::vector<std::size_t>{2, 1});
  CHECK(d.basepoint_vertex == 2);
  CHECK(d.attach_vertex == 0);

  const ResolutionGraph cc = cusp_chain(1);
  const IntersectionForm fc = intersection_form(cc);
  const ChainDecomposition dc = check_chain_structure(cc, fc, elliptic_sequence(cc, fc));
  CHECK(dc.chain == std::vector<std::size_t>{1});
  CHECK(dc.basepoint_vertex == 1);
  CHECK(dc.attach_vertex == 0);

  const ResolutionGraph m0 = cusp_vertex(-1);
  const IntersectionForm f0 = intersection_form(m0);
  CHECK_THROWS_AS(check_chain_structure(m0, f0, elliptic_sequence(m0, f0)), PreconditionError);
}

TEST_CASE("sequence invariants hold on every elliptic numerically Gorenstein corpus graph") {
  std::size_t checked = 0;
  for (const auto& [name, g] : standard_corpus()) {
    const ClassificationReport r = classify(g);
    if (!r.elliptic() || !r.numerically_gorenstein) continue;
    CAPTURE(name);
    const IntersectionForm f = intersection_form(g);
    const EllipticSequence s = elliptic_sequence(g, f);
    const Cycle zk = *canonical_cycle(g, f).integral;
    CHECK_NOTHROW(check_sequence_invariants(g, f, s, zk));
    for (std::size_t j = 0; j < s.length(); ++j) {
      CHECK(euler_char(f, s.members[j].cycle) == 0);
      CHECK(euler_char(f, s.partial_sums[j]) == 0);
      CHECK(euler_char(f, s.tail_sums[j]) == 0);
    }
    CHECK(leq(s.minimally_elliptic_cycle(), r.z_num));
    CHECK(leq(r.z_num, zk));
    ++checked;
  }
  CHECK(checked >= 7);
}

TEST_CASE("a tampered sequence is rejected") {
  const ResolutionGraph ex = example_chain();
  const IntersectionForm f = intersection_form(ex);
  EllipticSequence s = elliptic_sequence(ex, f);
  const Cycle zk = *canonical_cycle(ex, f).integral;
  s.members[1].cycle(2) = Integer(1);
  CHECK_THROWS_AS(check_sequence_invariants(ex, f, s, zk), InvariantViolation);
}
