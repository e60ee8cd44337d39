// invariants.hpp
// Classification and the analytic invariants that the graph determines under
// declared hypotheses: geometric genus, multiplicity, embedding dimension,
// Hilbert-Samuel function.
//
// Gorenstein-ness cannot be read off a graph. It enters as an explicit
// assumption, and every conclusion records which hypotheses it used.

#ifndef RESGRAPH_INVARIANTS_HPP
#define RESGRAPH_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "resgraph/elliptic.hpp"

namespace resgraph {

enum class SingularityClass { rational, elliptic, neither };
std::string_view to_string(SingularityClass c);

struct ClassificationReport {
  Integer chi_znum;
  SingularityClass singularity_class = SingularityClass::neither;
  bool du_val = false;
  bool numerically_gorenstein = false;
  bool minimally_elliptic = false;
  bool h1_link_zero = false;
  std::optional<std::size_t> m_plus_one;
  std::optional<StructureVerdict> structure;

  Cycle z_num;
  Integer z_num_squared;
  RationalCycle z_k;
  std::optional<EllipticSequence> sequence;

  bool elliptic() const { return singularity_class == SingularityClass::elliptic; }
  bool rational() const { return singularity_class == SingularityClass::rational; }
};

/// H^1(A, Z) = 0: tree, all genera zero, no nodal curves. Cusps are allowed.
bool h1_link_zero(const ResolutionGraph& g);

/// Throws InvalidGraph if `g` does not validate under `options`.
ClassificationReport classify(const ResolutionGraph& g, const ValidationOptions& options = {});

struct Assumptions {
  bool gorenstein = false;
};

struct TrailEntry {
  std::string claim;
  std::string reference;
  std::vector<std::string> hypotheses;
};

struct PgVerdict {
  enum class Kind { exact, range, undetermined };
  Kind kind = Kind::undetermined;
  long lo = 0;
  long hi = 0;
  std::string note;

  static PgVerdict exact_value(long v) { return {Kind::exact, v, v, {}}; }
  static PgVerdict range_of(long lo, long hi) { return {Kind::range, lo, hi, {}}; }
  bool is_exact(long v) const { return kind == Kind::exact && lo == v; }
};

struct GenusResult {
  PgVerdict verdict;
  std::vector<TrailEntry> trail;
};

GenusResult geometric_genus(const ResolutionGraph& g, const ClassificationReport& report,
                            const Assumptions& assumptions);

/// chi(Z_num) = 0 and Z_K = Z_num + E. Requires a numerically Gorenstein graph.
bool pg2_characterization(const ClassificationReport& report);

/// Throws HypothesisError naming the first unmet hypothesis of the
/// multiplicity theorem: elliptic, numerically Gorenstein, declared
/// Gorenstein, and p_g = m + 1.
void require_multiplicity_hypotheses(const ClassificationReport& report, const Assumptions& assumptions,
                       const PgVerdict& pg);

template <typename T>
struct WithTrail {
  T value;
  std::vector<TrailEntry> trail;
};

struct MultiplicityResult {
  Integer multiplicity;
  std::optional<ChainDecomposition> chain;  // Z_num^2 = -1 with m >= 1
};

WithTrail<MultiplicityResult> multiplicity(const ResolutionGraph& g, const ClassificationReport& report,
                                           const Assumptions& assumptions, const PgVerdict& pg);

/// max(3, -Z_num^2). When `min_chi` is given, also checks
/// emb dim >= mult + min_chi.
WithTrail<Integer> embedding_dimension(const ResolutionGraph& g, const ClassificationReport& report,
                                       const Assumptions& assumptions, const PgVerdict& pg,
                                       std::optional<Integer> min_chi = std::nullopt);

struct HilbertSamuelValue {
  Integer colength;  // dim O / m^k
  Integer graded;    // dim m^k / m^{k+1}
};

/// Needs Z_num^2 <= -3 in addition to the multiplicity hypotheses.
WithTrail<HilbertSamuelValue> hilbert_samuel(const ResolutionGraph& g, const ClassificationReport& report,
                                             const Assumptions& assumptions, const PgVerdict& pg,
                                             long k);

/// Degrees of a generating set of the graded ring of Z_num-multiples.
WithTrail<std::vector<int>> generator_degrees(const ClassificationReport& report,
                                              const Assumptions& assumptions, const PgVerdict& pg);

struct AuxiliaryFlags {
  bool complete_intersection_possible = false;  // Z^2 = -4
  bool not_complete_intersection = false;       // Z^2 <= -5
  bool kodaira_graph = false;                   // Z^2 = -1
  bool hypersurface_excluded = false;           // multiplicity would exceed 3
};

/// Requires an elliptic numerically Gorenstein graph (PreconditionError).
WithTrail<AuxiliaryFlags> auxiliary_flags(const ClassificationReport& report);

struct HilbertDescriptor {
  bool closed_form = false;  // Z_num^2 <= -3
  std::vector<HilbertSamuelValue> first_values;  // k = 1..5 when closed_form
  std::vector<int> generator_degrees;
};

struct InvariantReport {
  Assumptions assumptions;
  PgVerdict p_g;
  std::optional<bool> pg2_characterization;
  std::optional<Integer> multiplicity;
  std::optional<Integer> emb_dim;
  std::optional<HilbertDescriptor> hilbert_samuel;
  std::optional<AuxiliaryFlags> flags;
  std::optional<ChainDecomposition> chain;
  std::optional<std::size_t> basepoint_vertex;
  /// Set when the multiplicity theorem does not apply.
  std::optional<std::string> refused_hypothesis;
  std::optional<std::string> refusal_reason;
  std::vector<TrailEntry> hypothesis_trail;
};

/// Runs the whole pipeline; never throws HypothesisError (refusals are data).
InvariantReport compute_invariants(const ResolutionGraph& g, const ClassificationReport& report,
                                   const Assumptions& assumptions);

}  // namespace resgraph

#endif  // RESGRAPH_INVARIANTS_HPP
