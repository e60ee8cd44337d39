// oracle.hpp
// Brute-force verifiers. Everything here enumerates cycles in a box and
// filters; none of it calls the Laufer loop or the elliptic sequence
// builder, so it can be used to check them.

#ifndef RESGRAPH_ORACLE_HPP
#define RESGRAPH_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "resgraph/elliptic.hpp"

namespace resgraph {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Reads RESGRAPH_ORACLE_LIMIT, falling back to kDefaultEnumerationLimit.
std::uint64_t enumeration_limit_from_env();

/// Componentwise box 0 <= D <= cap over `support`; zero off it.
struct SearchBound {
  enum class Origin { default_cap, multiple, explicit_cap };

  Cycle cap;
  VertexSet support;
  Origin origin = Origin::explicit_cap;
  long factor = 0;  // for Origin::multiple

  /// Z_K + Z_num (rounding Z_K up when it is not integral).
  static SearchBound default_for(const ResolutionGraph& g);
  /// n * Z_num.
  static SearchBound multiple_of_znum(const ResolutionGraph& g, long n);
  /// Support is taken to be every vertex.
  static SearchBound explicit_cap(Cycle cap);
  /// Parses "default", "<n>z" or a comma-separated coefficient list.
  static SearchBound parse(const ResolutionGraph& g, const std::string& text);

  std::string describe() const;
  /// Number of nonzero cycles in the box (saturating).
  std::uint64_t box_size() const;
};

struct OracleOptions {
  std::uint64_t limit = kDefaultEnumerationLimit;
};

/// Calls `visit` with every cycle 0 < D <= cap, lexicographically (first
/// coordinate most significant). The vector passed is only valid during the
/// call. Throws PreconditionError for a bad cap, LimitExceeded over the limit.
void for_each_cycle(const SearchBound& bound, const OracleOptions& options,
                    const std::function<void(const Vector<std::int64_t>&)>& visit);

std::vector<Cycle> enumerate_cycles(const SearchBound& bound, const OracleOptions& options = {});

struct MinChi {
  Integer value;
  Cycle witness;
  bool truncated = true;  // minimum over the box only
};

MinChi min_chi_bruteforce(const ResolutionGraph& g, const SearchBound& bound,
                          const OracleOptions& options = {});

/// Componentwise minimum of { 0 < D <= cap : D.A_i <= 0 for i in subset }
/// over the box cap = 2 * `reference` (the cycle under test) on `subset`.
Cycle fundamental_cycle_bruteforce(const ResolutionGraph& g, const VertexSet& subset,
                                   const Cycle& reference, const OracleOptions& options = {});

/// All cycles D in the box with D.A_i <= 0 on `subset` (including those
/// above the minimum). Used for the lattice closure property.
std::vector<Cycle> antinef_cycles(const ResolutionGraph& g, const VertexSet& subset,
                                  const SearchBound& bound, const OracleOptions& options = {});

/// Cycles E in the box with chi(E) = 0 and chi(D) > 0 for every 0 < D < E.
std::vector<Cycle> minimally_elliptic_bruteforce(const ResolutionGraph& g, const SearchBound& bound,
                                                 const OracleOptions& options = {});

struct SequenceCharacterization {
  bool passed = false;
  std::vector<Cycle> antinef_below_zk;        // { 0 <= Z <= Z_K : A_i.Z <= 0 for all i }
  std::vector<Cycle> expected_partial_sums;   // { 0, C_0, ..., C_m }
  std::vector<Cycle> canonical_like;          // { Z : A_i.(Z - Z_K) >= 0 on |Z| }
  std::vector<Cycle> expected_tail_sums;      // { 0, C'_0, ..., C'_m }
};

/// Enumerates 0 <= Z <= Z_K and compares the two filtered sets against the
/// partial and tail sums of `seq`.
SequenceCharacterization sequence_characterization_check(const ResolutionGraph& g,
                                                         const EllipticSequence& seq,
                                                         const OracleOptions& options = {});

}  // namespace resgraph

#endif  // RESGRAPH_ORACLE_HPP
