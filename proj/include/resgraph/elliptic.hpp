// elliptic.hpp
// Elliptic sequences of numerically Gorenstein elliptic graphs and the
// structure results built on them.

#ifndef RESGRAPH_ELLIPTIC_HPP
#define RESGRAPH_ELLIPTIC_HPP

#include <optional>
#include <vector>

#include "resgraph/cycles.hpp"

namespace resgraph {

struct EllipticMember {
  VertexSet support;  // B_j
  Cycle cycle;        // Z_{B_j}
};

/// Z_{B_0} = Z_num, ..., Z_{B_m} = E together with the partial sums
/// C_t = sum_{i<=t} Z_{B_i} and tail sums C'_t = sum_{i>=t} Z_{B_i}.
struct EllipticSequence {
  std::vector<EllipticMember> members;
  std::vector<Cycle> partial_sums;
  std::vector<Cycle> tail_sums;

  std::size_t length() const { return members.size(); }  // m + 1
  std::size_t m() const { return members.size() - 1; }
  const Cycle& minimally_elliptic_cycle() const { return members.back().cycle; }
};

/// Builds the elliptic sequence by peeling fundamental cycles off Z_K.
///
/// Requires a valid, numerically Gorenstein, elliptic graph with Z_K != 0
/// (PreconditionError otherwise). Every structural property of the result is
/// checked before returning (InvariantViolation on failure).
EllipticSequence elliptic_sequence(const ResolutionGraph& g, const IntersectionForm& f);
EllipticSequence elliptic_sequence(const ResolutionGraph& g);

/// Re-checks the sequence properties against Z_K; throws InvariantViolation.
void check_sequence_invariants(const ResolutionGraph& g, const IntersectionForm& f,
                               const EllipticSequence& seq, const Cycle& canonical);

/// E = Z_{B_m}.
Cycle minimally_elliptic_cycle(const ResolutionGraph& g);

enum class StructureCase { distinguished_vertex, all_smooth_rational };

struct StructureVerdict {
  StructureCase which;
  std::optional<std::size_t> distinguished;  // the vertex with chi(A_i) = 0 in the first case
  /// Components of A - |E|; empty when E was not supplied.
  std::vector<VertexSet> rational_components;
  bool components_checked = false;
};

/// Either exactly one vertex has chi(A_i) = 0 and the rest are smooth
/// rational, or every vertex is smooth rational. When `e` is given, also
/// checks that each component of A - |E| supports a rational singularity.
/// Throws InvariantViolation when neither case holds.
StructureVerdict check_elliptic_structure(const ResolutionGraph& g, const IntersectionForm& f,
                                          const std::optional<Cycle>& e = std::nullopt);

/// A = |E| + gamma_{m-1} + ... + gamma_0 for Z_num^2 = -1.
struct ChainDecomposition {
  std::vector<std::size_t> chain;  // chain[j] = gamma_j; gamma_0 is the far end
  std::size_t basepoint_vertex;    // gamma_0, carries the base point of |O(-Z_num)|
  std::size_t attach_vertex;       // the vertex of |E| meeting gamma_{m-1}
};

/// Verifies the -2 chain structure of a Z_num^2 = -1 elliptic graph.
/// Requires m >= 1 (PreconditionError); any failed fact is an InvariantViolation.
ChainDecomposition check_chain_structure(const ResolutionGraph& g, const IntersectionForm& f,
                                         const EllipticSequence& seq);

}  // namespace resgraph

#endif  // RESGRAPH_ELLIPTIC_HPP
