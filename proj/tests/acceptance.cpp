// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "resgraph/cli.hpp"
#include "resgraph/elliptic.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/invariants.hpp"
#include "resgraph/oracle.hpp"

using namespace resgraph;
using namespace resgraph::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Cycle cyc(std::initializer_list<long> xs) {
  Cycle c(xs.size());
  Eigen::Index i = 0;
  for (long x : xs) c(i++) = Integer(x);
  return c;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Cycle> member_cycles(const EllipticSequence& s) {
  std::vector<Cycle> out;
  for (const auto& m : s.members) out.push_back(m.cycle);
  return out;
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / "resgraph_acceptance";
  fs::create_directories(p);
  return p;
}

std::string write_graph(const std::string& name, const ResolutionGraph& g) {
  const fs::path p = scratch() / (name + ".graph");
  std::ofstream(p) << serialize(g);
  return p.string();
}

const Assumptions kGorenstein{true};

void criterion_1(Check& c) {
  const auto t0 = Clock::now();
  const ResolutionGraph g = example_chain();
  const ClassificationReport r = classify(g);
  const PgVerdict pg = geometric_genus(g, r, kGorenstein).verdict;
  const double elapsed = seconds_since(t0);

  c.expect(r.z_num == cyc({1, 1, 1}), "Z_num");
  c.expect(r.numerically_gorenstein && canonical_cycle(g).integral == cyc({3, 2, 1}), "Z_K");
  c.expect(r.chi_znum == 0, "chi(Z_num)");
  c.expect(r.elliptic(), "elliptic");
  c.expect(r.sequence && member_cycles(*r.sequence) ==
                             std::vector<Cycle>{cyc({1, 1, 1}), cyc({1, 1, 0}), cyc({1, 0, 0})},
           "elliptic sequence");
  c.expect(r.sequence && r.sequence->m() == 2, "m");
  c.expect(r.sequence && r.sequence->minimally_elliptic_cycle() == cyc({1, 0, 0}), "E");
  c.expect(r.z_num_squared == -1, "Z_num^2");
  c.expect(!r.h1_link_zero, "h1_link_zero");
  c.expect(pg.kind == PgVerdict::Kind::range && pg.lo == 2 && pg.hi == 3, "p_g range(2,3)");
  c.expect(elapsed < 0.1, "runtime " + std::to_string(elapsed) + " s");

  // the same values through the command line
  const CliResult cli = cli_run({"classify", write_graph("example", g), "--assume-gorenstein"});
  c.expect(cli.status == 0 && cli.out.find("(3,2,1)") != std::string::npos, "CLI classify");
}

void criterion_2(Check& c) {
  const ResolutionGraph g = cusp_chain(1);
  const ClassificationReport r = classify(g);
  const InvariantReport inv = compute_invariants(g, r, kGorenstein);
  c.expect(r.sequence && r.sequence->m() == 1, "m = 1");
  c.expect(r.h1_link_zero, "h1_link_zero");
  c.expect(inv.p_g.is_exact(2), "p_g exact(2)");
  c.expect(inv.multiplicity == std::optional<Integer>(2), "multiplicity 2");
  c.expect(inv.emb_dim == std::optional<Integer>(3), "emb_dim 3");
  c.expect(inv.pg2_characterization == std::optional<bool>(true), "pg2 characterization");
  c.expect(inv.flags && inv.flags->kodaira_graph, "kodaira_graph");
  c.expect(inv.chain && inv.chain->chain == std::vector<std::size_t>{1} && inv.chain->attach_vertex == 0 &&
               inv.basepoint_vertex == std::optional<std::size_t>(1),
           "chain decomposition");
}

void criterion_3(Check& c) {
  const ResolutionGraph g = cusp_vertex(-3);
  const ClassificationReport r = classify(g);
  const PgVerdict pg = geometric_genus(g, r, kGorenstein).verdict;
  Integer previous = 0;
  for (long k = 1; k <= 10; ++k) {
    const HilbertSamuelValue v = hilbert_samuel(g, r, kGorenstein, pg, k).value;
    const Integer colength = Integer(3 * k * (k - 1) / 2 + 1);
    c.expect(v.colength == colength, "colength at k=" + std::to_string(k));
    c.expect(v.graded == Integer(3 * k), "graded at k=" + std::to_string(k));
    // dim O/m^{k+1} - dim O/m^k = dim m^k/m^{k+1}
    const HilbertSamuelValue next = hilbert_samuel(g, r, kGorenstein, pg, k + 1).value;
    c.expect(next.colength - v.colength == v.graded, "telescoping at k=" + std::to_string(k));
    c.expect(k == 1 || v.colength - previous == Integer(3 * (k - 1)), "difference at k=" + std::to_string(k));
    previous = v.colength;
  }
}

void criterion_4(Check& c, const std::vector<NamedGraph>& corpus) {
  const auto t0 = Clock::now();
  OracleOptions oracle;
  oracle.limit = 50'000'000;  // E_8 at twice Z_num is about 1.2e7 cycles
  std::size_t elliptic = 0, ng = 0;
  for (const auto& [name, g] : corpus) {
    const ClassificationReport r = classify(g);
    c.expect(fundamental_cycle_bruteforce(g, g.all_vertices(), r.z_num, oracle) == r.z_num,
             name + ": fundamental cycle");
    if (!r.elliptic()) continue;
    ++elliptic;
    const std::vector<Cycle> e = minimally_elliptic_bruteforce(g, SearchBound::default_for(g), oracle);
    c.expect(e.size() == 1, name + ": minimally elliptic singleton");
    if (!r.numerically_gorenstein) continue;
    ++ng;
    c.expect(!e.empty() && e.front() == r.sequence->minimally_elliptic_cycle(), name + ": E");
    c.expect(sequence_characterization_check(g, *r.sequence, oracle).passed, name + ": partial/tail sums");
  }
  const double elapsed = seconds_since(t0);
  c.expect(corpus.size() >= 30, "corpus size");
  c.expect(elliptic >= 6 && ng >= 6, "elliptic coverage");
  c.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_5(Check& c, const std::vector<NamedGraph>& corpus) {
  std::mt19937_64 rng(2023);
  std::uniform_int_distribution<long> coeff(-8, 8);
  for (const auto& [name, g] : corpus) {
    const IntersectionForm f = intersection_form(g);
    const ClassificationReport r = classify(g);
    c.expect(r.chi_znum <= 1, name + ": chi(Z_num) <= 1");
    c.expect(r.rational() == (r.chi_znum == 1), name + ": rational iff chi = 1");
    const CanonicalCycle zk = canonical_cycle(g, f);
    if (r.elliptic() && r.numerically_gorenstein) {
      const EllipticSequence& s = *r.sequence;
      try {
        check_sequence_invariants(g, f, s, *zk.integral);
      } catch (const InvariantViolation& e) {
        c.expect(false, name + ": " + e.what());
      }
      c.expect(leq(s.minimally_elliptic_cycle(), r.z_num) && leq(r.z_num, *zk.integral), name + ": E <= Z <= Z_K");
      for (std::size_t j = 0; j < s.length(); ++j)
        c.expect(euler_char(f, s.members[j].cycle) == 0 && euler_char(f, s.partial_sums[j]) == 0 &&
                     euler_char(f, s.tail_sums[j]) == 0,
                 name + ": chi of sequence cycles");
    }
    if (!zk.numerically_gorenstein) continue;
    for (int t = 0; t < 100; ++t) {
      Cycle d(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) d(i) = Integer(coeff(rng));
      c.expect(euler_char(f, Cycle(*zk.integral - d)) == euler_char(f, d), name + ": Riemann-Roch symmetry");
    }
  }
}

void criterion_6(Check& c) {
  const ResolutionGraph non_ng =
      parse_graph("vertex a e=-2 g=1\nvertex b e=-3\nedge a b\n");
  struct Case {
    std::string name;
    ResolutionGraph graph;
    bool gorenstein;
    std::string hypothesis;
  };
  const std::vector<Case> cases = {
      {"rational_a1", a_n(1), true, "elliptic"},
      {"rational_e8", e_n(8), true, "elliptic"},
      {"no_flag_cusp_chain", cusp_chain(1), false, "gorenstein"},
      {"no_flag_cusp3", cusp_vertex(-3), false, "gorenstein"},
      {"non_ng_elliptic", non_ng, true, "numerically_gorenstein"},
  };
  for (const auto& k : cases) {
    const std::string path = write_graph(k.name, k.graph);
    for (const std::string& command : {"invariants", "hilbert"}) {
      std::vector<std::string> args = {command, path};
      if (command == "hilbert") args.insert(args.end(), {"--k", "2"});
      if (k.gorenstein) args.push_back("--assume-gorenstein");
      const CliResult r = cli_run(args);
      c.expect(r.status == 2, k.name + " " + command + ": exit " + std::to_string(r.status));
      c.expect(r.err.find("[" + k.hypothesis + "]") != std::string::npos, k.name + " " + command + ": names hypothesis");
    }
    const ClassificationReport rep = classify(k.graph);
    const Assumptions a{k.gorenstein};
    const PgVerdict pg = geometric_genus(k.graph, rep, a).verdict;
    const std::vector<std::function<void()>> ops = {
        [&] { multiplicity(k.graph, rep, a, pg); },
        [&] { embedding_dimension(k.graph, rep, a, pg); },
        [&] { hilbert_samuel(k.graph, rep, a, pg, 2); },
        [&] { generator_degrees(rep, a, pg); },
    };
    for (const auto& op : ops) {
      try {
        op();
        c.expect(false, k.name + ": operation did not refuse");
      } catch (const HypothesisError& e) {
        c.expect(e.hypothesis() == k.hypothesis, k.name + ": refused with " + e.hypothesis());
      }
    }
  }
  // Z^2 in {-1, -2} under every other hypothesis
  for (const auto& [name, g] : std::vector<NamedGraph>{{"zsq1", cusp_chain(1)}, {"zsq2", genus_vertex(1, -2)}}) {
    const CliResult r = cli_run({"hilbert", write_graph(name, g), "--k", "2", "--assume-gorenstein"});
    c.expect(r.status == 2 && r.err.find("[z_num_squared_le_minus_3]") != std::string::npos,
             name + ": hilbert refuses");
  }
}

void criterion_7(Check& c, const std::vector<NamedGraph>& corpus) {
  for (const auto& [name, g] : corpus) {
    const Cycle reference = fundamental_cycle(g).cycle;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      c.expect(fundamental_cycle(g, g.all_vertices(), LauferChoice{seed}).cycle == reference,
               name + ": seed " + std::to_string(seed));
  }
  const std::string ex = write_graph("determinism_example", example_chain());
  const std::string cc = write_graph("determinism_cusp", cusp_chain(3));
  const std::vector<std::vector<std::string>> commands = {
      {"classify", ex},           {"classify", ex, "--json", "--assume-gorenstein"},
      {"sequence", cc, "--json"}, {"invariants", cc, "--assume-gorenstein"},
      {"verify", ex, "--json"},   {"batch", scratch().string(), "--json"},
  };
  for (const auto& args : commands) {
    const CliResult first = cli_run(args);
    for (int i = 0; i < 3; ++i) {
      const CliResult again = cli_run(args);
      c.expect(again.out == first.out && again.err == first.err && again.status == first.status,
               args[0] + ": output differs between runs");
    }
  }
}

}  // namespace

int main() {
  const std::vector<NamedGraph> corpus = standard_corpus();
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 worked example golden values", criterion_1},
      {"2 cusp chain p_g, multiplicity, embedding dimension", criterion_2},
      {"3 Hilbert-Samuel closed form k = 1..10", criterion_3},
      {"4 oracle equivalence on the corpus", [&](Check& c) { criterion_4(c, corpus); }},
      {"5 invariant properties on the corpus", [&](Check& c) { criterion_5(c, corpus); }},
      {"6 hypothesis discipline", criterion_6},
      {"7 determinism and choice independence", [&](Check& c) { criterion_7(c, corpus); }},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Check c;
    const auto t0 = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << "  criterion " << label << "  ("
              << std::to_string(elapsed) << " s)\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "      " << c.failures[i] << '\n';
    failed += c.failures.empty() ? 0 : 1;
  }
  std::cout << (failed ? "acceptance: FAILED" : "acceptance: all criteria passed") << '\n';
  return failed ? 1 : 0;
}
