#include "resgraph/elliptic.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <string>

namespace resgraph {

namespace {

void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation("elliptic sequence: " + what);
}

std::string at_j(const char* what, std::size_t j) { return std::string(what) + " at j=" + std::to_string(j); }

}  // namespace

EllipticSequence elliptic_sequence(const ResolutionGraph& g, const IntersectionForm& f) {
  const CanonicalCycle canonical = canonical_cycle(g, f);
  if (!canonical.numerically_gorenstein)
    throw PreconditionError("elliptic sequence requires a numerically Gorenstein graph");
  if (canonical.is_zero())
    throw PreconditionError("elliptic sequence requires Z_K != 0 (graph is Du Val)");
  const FundamentalCycle zn = fundamental_cycle(g, f, g.all_vertices());
  if (euler_char(f, zn.cycle) != 0)
    throw PreconditionError("elliptic sequence requires an elliptic graph (chi(Z_num) = 0)");
  const Cycle& zk = *canonical.integral;

  EllipticSequence seq;
  seq.members.push_back({g.all_vertices(), zn.cycle});
  Cycle sum = zn.cycle;
  while (sum != zk) {
    const Cycle rest = zk - sum;
    ensure(is_positive(rest), "Z_K - C_j is not a positive cycle");
    VertexSet next = support(rest);
    const VertexSet& previous = seq.members.back().support;
    ensure(next.size() < previous.size() &&
               std::includes(previous.begin(), previous.end(), next.begin(), next.end()),
           "supports do not shrink strictly");
    ensure(g.connected(next), "support " + g.id_list(next) + " is disconnected");
    Cycle z = fundamental_cycle(g, f, next).cycle;
    ensure(leq(z, rest), "Z_{B_j} exceeds Z_K - C_{j-1}");
    sum += z;
    seq.members.push_back({std::move(next), std::move(z)});
  }

  const std::size_t len = seq.members.size();
  seq.partial_sums.resize(len);
  seq.tail_sums.resize(len);
  for (std::size_t t = 0; t < len; ++t)
    seq.partial_sums[t] = t == 0 ? seq.members[0].cycle
                                 : Cycle(seq.partial_sums[t - 1] + seq.members[t].cycle);
  for (std::size_t t = len; t-- > 0;)
    seq.tail_sums[t] = t + 1 == len ? seq.members[t].cycle
                                    : Cycle(seq.tail_sums[t + 1] + seq.members[t].cycle);

  check_sequence_invariants(g, f, seq, zk);
  return seq;
}

EllipticSequence elliptic_sequence(const ResolutionGraph& g) {
  return elliptic_sequence(g, intersection_form(g));
}

void check_sequence_invariants(const ResolutionGraph& g, const IntersectionForm& f,
                               const EllipticSequence& seq, const Cycle& zk) {
  const auto& ms = seq.members;
  const std::size_t len = ms.size();
  ensure(len > 0, "empty sequence");
  ensure(ms[0].support == g.all_vertices(), "B_0 is not the whole graph");

  Cycle total = Cycle::Zero(zk.size());
  for (std::size_t j = 0; j < len; ++j) {
    ensure(g.connected(ms[j].support), at_j("disconnected support", j));
    ensure(support(ms[j].cycle) == ms[j].support, at_j("Z_{B_j} does not have support B_j", j));
    if (j + 1 < len) {
      const VertexSet& a = ms[j].support;
      const VertexSet& b = ms[j + 1].support;
      ensure(b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end()),
             at_j("B_{j+1} is not a proper subset of B_j", j));
      ensure(leq(ms[j + 1].cycle, ms[j].cycle), at_j("Z_{B_{j+1}} > Z_{B_j}", j));
      // curves of B_{j+1} are orthogonal to Z_{B_j}
      for (std::size_t i : b)
        ensure(f.dot_vertex(i, ms[j].cycle) == 0, at_j("A_i . Z_{B_j} != 0 on B_{j+1}", j));
    }
    for (std::size_t k = j + 1; k < len; ++k)
      ensure(f.dot(ms[j].cycle, ms[k].cycle) == 0, at_j("Z_{B_i} . Z_{B_j} != 0", j));
    total += ms[j].cycle;
  }
  ensure(total == zk, "sum of Z_{B_j} differs from Z_K");

  for (std::size_t t = 0; t < len; ++t) {
    const Cycle& c = seq.partial_sums.at(t);
    const Cycle& ct = seq.tail_sums.at(t);
    for (std::size_t i = 0; i < g.size(); ++i)
      ensure(f.dot_vertex(i, c) <= 0, at_j("A_i . C_t > 0", t));
    for (std::size_t i : ms[t].support)
      ensure(f.dot_vertex(i, ct) == f.dot_vertex(i, zk), at_j("A_i . C'_t != A_i . Z_K on B_t", t));
    ensure(euler_char(f, ms[t].cycle) == 0, at_j("chi(Z_{B_j}) != 0", t));
    ensure(euler_char(f, c) == 0, at_j("chi(C_j) != 0", t));
    ensure(euler_char(f, ct) == 0, at_j("chi(C'_j) != 0", t));
  }

  const Cycle& e = ms.back().cycle;
  ensure(leq(e, ms[0].cycle) && leq(ms[0].cycle, zk), "E <= Z_num <= Z_K fails");

  // Z_{B_j} connects to Z_{B_i} (i < j) through smooth rational unit steps.
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      connecting_sequence(g, f, ms[j].cycle, ms[i].support, /*expect_unit_steps=*/true);
}

Cycle minimally_elliptic_cycle(const ResolutionGraph& g) {
  return elliptic_sequence(g).minimally_elliptic_cycle();
}

StructureVerdict check_elliptic_structure(const ResolutionGraph& g, const IntersectionForm& f,
                                          const std::optional<Cycle>& e) {
  StructureVerdict verdict{StructureCase::all_smooth_rational, std::nullopt, {}, false};
  std::size_t singular = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const VertexData& v = g.vertex(i);
    if (v.smooth_rational()) continue;
    ++singular;
    // chi(A_i) = 1 - g_i - delta_i
    const long chi = 1 - static_cast<long>(v.genus) - static_cast<long>(v.delta());
    if (chi != 0)
      throw InvariantViolation("elliptic structure: vertex '" + v.id + "' has chi(A_i) = " +
                               std::to_string(chi));
    verdict.which = StructureCase::distinguished_vertex;
    verdict.distinguished = i;
  }
  if (singular > 1)
    throw InvariantViolation("elliptic structure: more than one curve is not smooth rational");

  if (e) {
    VertexSet rest;
    for (std::size_t i = 0; i < g.size(); ++i)
      if ((*e)(static_cast<Eigen::Index>(i)) == 0) rest.push_back(i);
    if (verdict.distinguished && (*e)(static_cast<Eigen::Index>(*verdict.distinguished)) == 0)
      throw InvariantViolation("elliptic structure: the distinguished curve lies outside |E|");
    for (VertexSet& comp : g.components(rest)) {
      const Cycle z = fundamental_cycle(g, f, comp).cycle;
      if (euler_char(f, z) != 1)
        throw InvariantViolation("elliptic structure: component " + g.id_list(comp) +
                                 " of A - |E| is not rational");
      verdict.rational_components.push_back(std::move(comp));
    }
    verdict.components_checked = true;
  }
  return verdict;
}

namespace {

void ensure_chain(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation("Z_num^2 = -1 structure: " + what);
}

}  // namespace

ChainDecomposition check_chain_structure(const ResolutionGraph& g, const IntersectionForm& f,
                                         const EllipticSequence& seq) {
  const std::size_t m = seq.m();
  if (m < 1) throw PreconditionError("chain decomposition needs m >= 1");
  const Cycle& zn = seq.members.front().cycle;
  if (f.dot(zn, zn) != -1) throw PreconditionError("chain decomposition needs Z_num^2 = -1");
  const Cycle zk = seq.tail_sums.front();
  const Cycle& e = seq.minimally_elliptic_cycle();

  // gamma_0: the unique curve with gamma_0 . Z_num = -1
  std::optional<std::size_t> gamma0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Integer d = f.dot_vertex(i, zn);
    if (d == -1) {
      ensure_chain(!gamma0, "more than one curve with A_i . Z_num = -1");
      gamma0 = i;
    } else {
      ensure_chain(d == 0, "A_i . Z_num not in {0, -1}");
    }
  }
  ensure_chain(gamma0.has_value(), "no curve with A_i . Z_num = -1");
  const auto g0 = static_cast<Eigen::Index>(*gamma0);
  ensure_chain(zn(g0) == 1 && zk(g0) == 1, "m_{gamma_0}(Z_num) or m_{gamma_0}(Z_K) != 1");

  ChainDecomposition out;
  for (std::size_t j = 0; j < m; ++j) {
    const VertexSet& a = seq.members[j].support;
    const VertexSet& b = seq.members[j + 1].support;
    VertexSet diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    ensure_chain(diff.size() == 1, "B_j - B_{j+1} is not a single curve");
    const VertexData& v = g.vertex(diff[0]);
    ensure_chain(v.smooth_rational() && v.self_int == -2,
                 "chain curve '" + v.id + "' is not a smooth rational -2 curve");
    out.chain.push_back(diff[0]);
  }
  ensure_chain(out.chain.front() == *gamma0, "gamma_0 is not the first peeled curve");

  for (std::size_t j = 0; j < m; ++j) {
    Cycle expected = e;
    for (std::size_t i = j; i < m; ++i) expected(static_cast<Eigen::Index>(out.chain[i])) += 1;
    ensure_chain(expected == seq.members[j].cycle, "Z_{B_j} != E + sum_{i>=j} gamma_i");
  }
  ensure_chain(f.dot(e, e) == -1, "E^2 != -1");

  // consecutive chain curves meet once; only gamma_{m-1} meets |E|
  const VertexSet e_support = support(e);
  auto in_e = [&](std::size_t v) {
    return std::binary_search(e_support.begin(), e_support.end(), v);
  };
  for (std::size_t j = 0; j + 1 < m; ++j)
    ensure_chain(g.multiplicity(out.chain[j], out.chain[j + 1]) == 1, "chain is not a path");
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t w : g.neighbours(out.chain[j])) {
      if (!in_e(w)) continue;
      ensure_chain(j + 1 == m, "an inner chain curve meets |E|");
    }
  }
  std::optional<std::size_t> attach;
  for (std::size_t w : g.neighbours(out.chain.back())) {
    if (!in_e(w)) continue;
    ensure_chain(!attach, "the chain meets |E| in more than one curve");
    ensure_chain(g.multiplicity(w, out.chain.back()) == 1, "the chain meets |E| more than once");
    attach = w;
  }
  ensure_chain(attach.has_value(), "the chain does not meet |E|");
  ensure_chain(f.dot_vertex(*attach, e) == -1, "attaching curve has A . E != -1");

  // gamma_j sits at distance m - j from |E|
  std::vector<long> dist(g.size(), -1);
  std::queue<std::size_t> queue;
  for (std::size_t v : e_support) {
    dist[v] = 0;
    queue.push(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w : g.neighbours(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
  }
  for (std::size_t j = 0; j < m; ++j)
    ensure_chain(dist[out.chain[j]] == static_cast<long>(m - j), "chain order disagrees with distance");

  out.basepoint_vertex = *gamma0;
  out.attach_vertex = *attach;
  return out;
}

}  // namespace resgraph
