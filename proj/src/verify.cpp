#include "resgraph/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace resgraph {

std::string_view to_string(VerificationRow::Status s) {
  switch (s) {
    case VerificationRow::Status::passed: return "pass";
    case VerificationRow::Status::failed: return "FAIL";
    case VerificationRow::Status::skipped: return "skip";
  }
  return "skip";
}

bool all_passed(const std::vector<VerificationRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const VerificationRow& r) {
    return r.status == VerificationRow::Status::failed;
  });
}

namespace {

std::string show(const Cycle& c) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < c.size(); ++i) out << (i ? "," : "") << c(i);
  out << ")";
  return out.str();
}

using Status = VerificationRow::Status;

template <typename Check>
VerificationRow run_row(std::string name, Check&& check) {
  VerificationRow row{std::move(name), Status::skipped, {}};
  try {
    check(row);
  } catch (const LimitExceeded& e) {
    row.status = Status::skipped;
    row.detail = e.what();
  } catch (const Error& e) {
    row.status = Status::failed;
    row.detail = e.what();
  }
  return row;
}

void set(VerificationRow& row, bool ok, std::string detail) {
  row.status = ok ? Status::passed : Status::failed;
  row.detail = std::move(detail);
}

}  // namespace

std::vector<VerificationRow> verify_graph(const ResolutionGraph& g, const ClassificationReport& r,
                                          const VerificationOptions& options) {
  const IntersectionForm f = intersection_form(g);
  const SearchBound bound = options.bound ? *options.bound : SearchBound::default_for(g);
  std::vector<VerificationRow> rows;

  rows.push_back(run_row("fundamental cycle = brute-force minimum", [&](VerificationRow& row) {
    const Cycle brute = fundamental_cycle_bruteforce(g, g.all_vertices(), r.z_num, options.oracle);
    set(row, brute == r.z_num, "Laufer " + show(r.z_num) + ", brute force " + show(brute));
  }));

  rows.push_back(run_row("fundamental cycle independent of Laufer choices", [&](VerificationRow& row) {
    for (unsigned s = 0; s < options.laufer_seeds; ++s) {
      const Cycle z = fundamental_cycle(g, f, g.all_vertices(), LauferChoice{s}).cycle;
      if (z != r.z_num) {
        set(row, false, "seed " + std::to_string(s) + " gave " + show(z));
        return;
      }
    }
    set(row, true, std::to_string(options.laufer_seeds) + " seeds agree");
  }));

  rows.push_back(run_row("min chi over box agrees with class", [&](VerificationRow& row) {
    const MinChi mc = min_chi_bruteforce(g, bound, options.oracle);
    bool ok = mc.value <= r.chi_znum;
    if (r.rational()) ok = ok && mc.value == 1;
    if (r.elliptic()) ok = ok && mc.value == 0;
    set(row, ok, "min chi = " + mc.value.str() + " at " + show(mc.witness) + " over box " +
                     bound.describe() + " (box minimum only)");
  }));

  if (r.elliptic()) {
    rows.push_back(run_row("minimally elliptic cycle is unique", [&](VerificationRow& row) {
      const auto found = minimally_elliptic_bruteforce(g, bound, options.oracle);
      bool ok = found.size() == 1;
      std::string detail = std::to_string(found.size()) + " candidate(s)";
      if (ok) detail += ": " + show(found.front());
      if (ok && r.sequence) {
        const Cycle& e = r.sequence->minimally_elliptic_cycle();
        ok = found.front() == e;
        detail += ", sequence gives " + show(e);
      }
      set(row, ok, detail);
    }));
  }

  if (r.sequence) {
    rows.push_back(run_row("cycles below Z_K match partial and tail sums", [&](VerificationRow& row) {
      const auto check = sequence_characterization_check(g, *r.sequence, options.oracle);
      set(row, check.passed,
          std::to_string(check.antinef_below_zk.size()) + " anti-nef cycles, " +
              std::to_string(check.canonical_like.size()) + " canonical-like cycles");
    }));
  }

  if (r.numerically_gorenstein) {
    rows.push_back(run_row("Riemann-Roch symmetry chi(Z_K - D) = chi(D)", [&](VerificationRow& row) {
      Cycle zk(r.z_k.size());
      for (Eigen::Index i = 0; i < zk.size(); ++i) zk(i) = numerator(r.z_k(i));
      std::mt19937_64 rng(options.sample_seed);
      std::uniform_int_distribution<int> coeff(-5, 5);
      for (unsigned s = 0; s < options.riemann_roch_samples; ++s) {
        Cycle d(zk.size());
        for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = coeff(rng);
        if (euler_char(f, Cycle(zk - d)) != euler_char(f, d)) {
          set(row, false, "fails at D = " + show(d));
          return;
        }
      }
      set(row, true, std::to_string(options.riemann_roch_samples) + " random cycles");
    }));
  }

  if (r.minimally_elliptic) {
    rows.push_back(run_row("proper connected subgraphs are rational", [&](VerificationRow& row) {
      const std::size_t n = g.size();
      if (n > options.subset_scan_max_vertices) {
        row.status = Status::skipped;
        row.detail = "more than " + std::to_string(options.subset_scan_max_vertices) + " vertices";
        return;
      }
      std::size_t checked = 0;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet subset;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U) subset.push_back(i);
        if (!g.connected(subset)) continue;
        const Cycle z = fundamental_cycle(g, f, subset).cycle;
        if (euler_char(f, z) != 1) {
          set(row, false, "subset " + g.id_list(subset) + " is not rational");
          return;
        }
        ++checked;
      }
      set(row, true, std::to_string(checked) + " connected proper subsets");
    }));
  }
  return rows;
}

}  // namespace resgraph
