// cycles.hpp
// The cycle lattice: Euler characteristic, Laufer's computation sequences
// for fundamental cycles, and the canonical cycle.

#ifndef RESGRAPH_CYCLES_HPP
#define RESGRAPH_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// Integer combination of the exceptional curves, indexed by vertex.
using Cycle = IntegerVector;
/// Rational combination; the canonical cycle lives here until shown integral.
using RationalCycle = RationalVector;

/// Basis cycle A_i.
Cycle basis_cycle(std::size_t n, std::size_t i);

/// { i : coeffs[i] != 0 }
VertexSet support(const Cycle& d);

/// D > 0: all coefficients non-negative and at least one positive.
bool is_positive(const Cycle& d);

/// a <= b componentwise.
bool leq(const Cycle& a, const Cycle& b);

/// chi(D) = -(D.D + D.K) / 2 by Riemann-Roch. Accepts any integer cycle.
/// Throws InvariantViolation if D.D + D.K is odd.
Integer euler_char(const IntersectionForm& f, const Cycle& d);

/// One step of a computation sequence Z_{l+1} = Z_l + A_i.
struct SequenceStep {
  std::size_t vertex = 0;
  Integer intersection;     // A_i . Z_l, strictly positive
  bool smooth_rational = false;
  Cycle after;              // Z_{l+1}
};

struct ComputationSequence {
  Cycle start;
  std::vector<SequenceStep> steps;
  Cycle end;

  /// Every step added a smooth rational curve with A_i . Z_l = 1.
  bool unit_steps() const;
};

/// How Laufer's loop picks its start vertex and the next curve to add.
/// The default (no seed) always takes the lowest admissible index; with a
/// seed both choices are drawn uniformly at random.
struct LauferChoice {
  std::optional<std::uint64_t> seed;
};

struct FundamentalCycle {
  Cycle cycle;
  ComputationSequence sequence;
};

/// Minimal positive cycle Z supported on `subset` with Z.A_i <= 0 for all i in
/// `subset`. Throws PreconditionError if `subset` is empty or disconnected.
FundamentalCycle fundamental_cycle(const ResolutionGraph& g, const IntersectionForm& f,
                                   const VertexSet& subset, LauferChoice choice = {});
FundamentalCycle fundamental_cycle(const ResolutionGraph& g, const VertexSet& subset,
                                   LauferChoice choice = {});
FundamentalCycle fundamental_cycle(const ResolutionGraph& g);

/// Greedy continuation from `from` (the fundamental cycle of a connected
/// subset of `to_support`) up to the fundamental cycle of `to_support`.
/// With `expect_unit_steps` every step must add a smooth rational curve
/// meeting the current cycle with intersection exactly 1.
ComputationSequence connecting_sequence(const ResolutionGraph& g, const IntersectionForm& f,
                                        const Cycle& from, const VertexSet& to_support,
                                        bool expect_unit_steps = false);

struct CanonicalCycle {
  RationalCycle rational;       // M . Z_K = -k_degrees
  bool numerically_gorenstein;  // Z_K integral
  std::optional<Cycle> integral;

  bool is_zero() const;
};

/// Solves Z_K . A_i = -K . A_i exactly. When Z_K is integral and nonzero,
/// checks Z_K > 0 on every vertex and Z_K >= Z_num.
CanonicalCycle canonical_cycle(const ResolutionGraph& g, const IntersectionForm& f);
CanonicalCycle canonical_cycle(const ResolutionGraph& g);

}  // namespace resgraph

#endif  // RESGRAPH_CYCLES_HPP
