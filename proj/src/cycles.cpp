#include "resgraph/cycles.hpp"

#include <algorithm>
#include <random>

namespace resgraph {

Cycle basis_cycle(std::size_t n, std::size_t i) {
  Cycle c = Cycle::Zero(static_cast<Eigen::Index>(n));
  c(static_cast<Eigen::Index>(i)) = 1;
  return c;
}

VertexSet support(const Cycle& d) {
  VertexSet s;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) != 0) s.push_back(static_cast<std::size_t>(i));
  return s;
}

bool is_positive(const Cycle& d) {
  bool any = false;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) < 0) return false;
    if (d(i) > 0) any = true;
  }
  return any;
}

bool leq(const Cycle& a, const Cycle& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

Integer euler_char(const IntersectionForm& f, const Cycle& d) {
  const Integer twice = f.dot(d, d) + f.dot_canonical(d);
  if (twice % 2 != 0)
    throw InvariantViolation("D.D + D.K is odd; adjunction degrees are inconsistent");
  return -twice / 2;
}

bool ComputationSequence::unit_steps() const {
  return std::all_of(steps.begin(), steps.end(), [](const SequenceStep& s) {
    return s.smooth_rational && s.intersection == 1;
  });
}

namespace {

class Chooser {
 public:
  explicit Chooser(const LauferChoice& c) {
    if (c.seed) rng_.emplace(*c.seed);
  }
  std::size_t pick(const VertexSet& candidates) {
    if (!rng_) return candidates.front();
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    return candidates[dist(*rng_)];
  }

 private:
  std::optional<std::mt19937_64> rng_;
};

// Adds curves A_i (i in subset) with A_i . Z > 0 until none is left.
void run_greedy(const ResolutionGraph& g, const IntersectionForm& f, const VertexSet& subset,
                Chooser& chooser, ComputationSequence& seq) {
  Cycle z = seq.start;
  for (;;) {
    VertexSet candidates;
    for (std::size_t i : subset)
      if (f.dot_vertex(i, z) > 0) candidates.push_back(i);
    if (candidates.empty()) break;
    const std::size_t i = chooser.pick(candidates);
    SequenceStep step;
    step.vertex = i;
    step.intersection = f.dot_vertex(i, z);
    step.smooth_rational = g.vertex(i).smooth_rational();
    z(static_cast<Eigen::Index>(i)) += 1;
    step.after = z;
    seq.steps.push_back(std::move(step));
  }
  seq.end = std::move(z);
}

void check_subset(const ResolutionGraph& g, const VertexSet& subset) {
  if (subset.empty()) throw PreconditionError("fundamental_cycle: empty vertex subset");
  for (std::size_t v : subset)
    if (v >= g.size()) throw PreconditionError("fundamental_cycle: vertex index out of range");
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw PreconditionError("fundamental_cycle: subset must be sorted and duplicate-free");
  if (!g.connected(subset))
    throw PreconditionError("fundamental_cycle: subset " + g.id_list(subset) + " is disconnected");
}

}  // namespace

FundamentalCycle fundamental_cycle(const ResolutionGraph& g, const IntersectionForm& f,
                                   const VertexSet& subset, LauferChoice choice) {
  check_subset(g, subset);
  Chooser chooser(choice);
  ComputationSequence seq;
  seq.start = basis_cycle(g.size(), chooser.pick(subset));
  run_greedy(g, f, subset, chooser, seq);
  Cycle z = seq.end;
  return {std::move(z), std::move(seq)};
}

FundamentalCycle fundamental_cycle(const ResolutionGraph& g, const VertexSet& subset,
                                   LauferChoice choice) {
  return fundamental_cycle(g, intersection_form(g), subset, choice);
}

FundamentalCycle fundamental_cycle(const ResolutionGraph& g) {
  return fundamental_cycle(g, g.all_vertices());
}

ComputationSequence connecting_sequence(const ResolutionGraph& g, const IntersectionForm& f,
                                        const Cycle& from, const VertexSet& to_support,
                                        bool expect_unit_steps) {
  if (static_cast<std::size_t>(from.size()) != g.size())
    throw PreconditionError("connecting_sequence: cycle length does not match the graph");
  const VertexSet from_support = support(from);
  if (!is_positive(from) || !std::includes(to_support.begin(), to_support.end(),
                                           from_support.begin(), from_support.end()))
    throw PreconditionError("connecting_sequence: start cycle is not supported in the target");
  if (fundamental_cycle(g, f, from_support).cycle != from)
    throw PreconditionError("connecting_sequence: start cycle is not the fundamental cycle of " +
                            g.id_list(from_support));
  const Cycle target = fundamental_cycle(g, f, to_support).cycle;

  Chooser chooser(LauferChoice{});
  ComputationSequence seq;
  seq.start = from;
  run_greedy(g, f, to_support, chooser, seq);
  if (seq.end != target)
    throw PreconditionError("connecting_sequence: greedy loop stopped before the fundamental cycle "
                            "of " + g.id_list(to_support));
  if (expect_unit_steps && !seq.unit_steps())
    throw InvariantViolation("connecting_sequence: a step added a singular curve or met the "
                             "cycle with intersection != 1");
  return seq;
}

bool CanonicalCycle::is_zero() const {
  for (Eigen::Index i = 0; i < rational.size(); ++i)
    if (rational(i) != 0) return false;
  return true;
}

CanonicalCycle canonical_cycle(const ResolutionGraph& g, const IntersectionForm& f) {
  CanonicalCycle out;
  out.rational = solve_exact(f.matrix, -f.k_degrees);
  out.numerically_gorenstein = is_integral(out.rational);
  if (!out.numerically_gorenstein) return out;

  Cycle zk(out.rational.size());
  for (Eigen::Index i = 0; i < zk.size(); ++i) zk(i) = numerator(out.rational(i));
  out.integral = zk;

  // Positivity and Z_K >= Z_num need K.A_i >= 0, i.e. a minimal resolution.
  const bool minimal = (f.k_degrees.array() >= Integer(0)).all();
  if (minimal && !out.is_zero()) {
    if (!(zk.array() > Integer(0)).all())
      throw InvariantViolation("canonical cycle has a non-positive coefficient");
    if (!leq(fundamental_cycle(g, f, g.all_vertices()).cycle, zk))
      throw InvariantViolation("canonical cycle is not >= the fundamental cycle");
  }
  return out;
}

CanonicalCycle canonical_cycle(const ResolutionGraph& g) {
  return canonical_cycle(g, intersection_form(g));
}

}  // namespace resgraph
