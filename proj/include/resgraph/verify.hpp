// verify.hpp
// Cross-checks of the fast algorithms against the brute-force oracle.

#ifndef RESGRAPH_VERIFY_HPP
#define RESGRAPH_VERIFY_HPP

#include <string>
#include <vector>

#include "resgraph/invariants.hpp"
#include "resgraph/oracle.hpp"

namespace resgraph {

struct VerificationRow {
  enum class Status { passed, failed, skipped };
  std::string check;
  Status status = Status::skipped;
  std::string detail;
};

std::string_view to_string(VerificationRow::Status s);

struct VerificationOptions {
  OracleOptions oracle;
  std::optional<SearchBound> bound;  // default: SearchBound::default_for
  unsigned laufer_seeds = 20;
  unsigned riemann_roch_samples = 100;
  std::uint64_t sample_seed = 0x5eed;
  std::size_t subset_scan_max_vertices = 14;
};

/// Runs every applicable oracle check for a classified graph. Checks that
/// do not apply, or whose box exceeds the limit, are reported as skipped.
std::vector<VerificationRow> verify_graph(const ResolutionGraph& g, const ClassificationReport& report,
                                          const VerificationOptions& options = {});

bool all_passed(const std::vector<VerificationRow>& rows);

}  // namespace resgraph

#endif  // RESGRAPH_VERIFY_HPP
