#include "resgraph/invariants.hpp"

#include <algorithm>

namespace resgraph {

namespace {

constexpr const char* kRationality = "Artin rationality criterion: chi(Z_num) = 1";
constexpr const char* kEllipticity = "ellipticity criterion: chi(Z_num) = 0";
constexpr const char* kMinimallyElliptic = "Laufer: minimally elliptic <=> Gorenstein with p_g = 1";
constexpr const char* kYauBound = "Yau bound: p_g <= m + 1 for numerically Gorenstein elliptic";
constexpr const char* kGenusFormula = "elliptic Gorenstein with rational homology sphere link: p_g = m + 1";
constexpr const char* kStrictH1 = "Gorenstein elliptic, m >= 1: h^1(O_{Z_K}) > h^1(O_E) = 1";
constexpr const char* kGeneric = "without Gorenstein, p_g is generically 1";
constexpr const char* kPg2 = "Gorenstein with H^1(A,Z) = 0: p_g = 2 <=> chi(Z_num) = 0 and Z_K = Z_num + E";
constexpr const char* kMultiplicity = "elliptic Gorenstein, p_g = m + 1: mult = -Z_num^2 (Z_num^2 <= -2), 2 (Z_num^2 = -1)";
constexpr const char* kEmbDim = "elliptic Gorenstein, p_g = m + 1: emb dim = max(3, -Z_num^2)";
constexpr const char* kHilbert = "elliptic Gorenstein, p_g = m + 1, Z_num^2 <= -3: dim O/m^k = chi(k Z_num) + 1";
constexpr const char* kGenerators = "generators of the Z_num-filtration ring by -Z_num^2";
constexpr const char* kChain = "Z_num^2 = -1: A = |E| + chain of smooth rational -2 curves";
constexpr const char* kCompleteIntersection = "Laufer: Z_num^2 = -4 tangential complete intersection, <= -5 not";
constexpr const char* kKodaira = "Z_num^2 = -1 elliptic graphs are Kodaira graphs";
constexpr const char* kHypersurface = "elliptic hypersurfaces have multiplicity <= 3";

const std::vector<std::string> kTopological{};
const std::vector<std::string> kGorensteinOnly{"gorenstein"};
const std::vector<std::string> kMultiplicityHypotheses{"elliptic", "numerically_gorenstein", "gorenstein",
                                         "pg_equals_m_plus_one"};

}  // namespace

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::rational: return "rational";
    case SingularityClass::elliptic: return "elliptic";
    case SingularityClass::neither: return "neither";
  }
  return "neither";
}

bool h1_link_zero(const ResolutionGraph& g) {
  if (g.size() == 0 || !g.connected()) return false;
  if (g.edge_count() != g.size() - 1) return false;
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [](const VertexData& v) { return v.genus == 0 && v.nodes == 0; });
}

ClassificationReport classify(const ResolutionGraph& g, const ValidationOptions& options) {
  require_valid(g, options);
  const IntersectionForm f = intersection_form(g);

  ClassificationReport r;
  r.z_num = fundamental_cycle(g, f, g.all_vertices()).cycle;
  r.z_num_squared = f.dot(r.z_num, r.z_num);
  r.chi_znum = euler_char(f, r.z_num);
  if (r.chi_znum > 1) throw InvariantViolation("chi(Z_num) > 1");
  r.singularity_class = r.chi_znum == 1   ? SingularityClass::rational
                        : r.chi_znum == 0 ? SingularityClass::elliptic
                                          : SingularityClass::neither;

  const CanonicalCycle ck = canonical_cycle(g, f);
  r.z_k = ck.rational;
  r.numerically_gorenstein = ck.numerically_gorenstein;
  r.du_val = ck.is_zero();
  r.h1_link_zero = h1_link_zero(g);
  if (r.du_val && !r.rational()) throw InvariantViolation("Z_K = 0 on a non-rational graph");

  if (r.elliptic() && r.numerically_gorenstein) {
    r.sequence = elliptic_sequence(g, f);
    r.m_plus_one = r.sequence->length();
    r.minimally_elliptic = *ck.integral == r.z_num;
    if (r.minimally_elliptic != (*r.m_plus_one == 1))
      throw InvariantViolation("minimally elliptic disagrees with sequence length");
  }
  if (r.elliptic()) {
    std::optional<Cycle> e;
    if (r.sequence) e = r.sequence->minimally_elliptic_cycle();
    r.structure = check_elliptic_structure(g, f, e);
  }
  return r;
}

GenusResult geometric_genus(const ResolutionGraph&, const ClassificationReport& r,
                            const Assumptions& a) {
  GenusResult out;
  auto& v = out.verdict;
  if (r.rational()) {
    v = PgVerdict::exact_value(0);
    out.trail.push_back({"p_g = 0", kRationality, kTopological});
    return out;
  }
  if (!r.elliptic()) {
    v.kind = PgVerdict::Kind::undetermined;
    v.note = "chi(Z_num) < 0: no topological formula for p_g";
    return out;
  }
  if (!r.numerically_gorenstein) {
    v.kind = PgVerdict::Kind::undetermined;
    v.note = a.gorenstein ? "Z_K is not integral, which contradicts the Gorenstein assumption"
                          : "elliptic but not numerically Gorenstein: p_g >= 1, no upper bound";
    return out;
  }

  const long m = static_cast<long>(*r.m_plus_one) - 1;
  if (!a.gorenstein) {
    v = PgVerdict::range_of(1, m + 1);
    v.note = "generic analytic structures have p_g = 1";
    out.trail.push_back({"p_g <= m + 1", kYauBound, kTopological});
    out.trail.push_back({"p_g generically 1", kGeneric, kTopological});
    return out;
  }
  if (m == 0) {
    v = PgVerdict::exact_value(1);
    out.trail.push_back({"p_g = 1", kMinimallyElliptic, kGorensteinOnly});
    return out;
  }
  if (r.h1_link_zero) {
    v = PgVerdict::exact_value(m + 1);
    out.trail.push_back({"p_g = m + 1", kGenusFormula, {"gorenstein", "h1_link_zero"}});
    return out;
  }
  v = PgVerdict::range_of(2, m + 1);
  v.note = "H^1(A,Z) != 0: both endpoints can occur";
  out.trail.push_back({"p_g <= m + 1", kYauBound, kTopological});
  out.trail.push_back({"p_g >= 2", kStrictH1, kGorensteinOnly});
  return out;
}

bool pg2_characterization(const ClassificationReport& r) {
  if (!r.numerically_gorenstein)
    throw PreconditionError("pg2 characterization requires a numerically Gorenstein graph");
  if (!r.elliptic() || !r.sequence) return false;
  const EllipticSequence& seq = *r.sequence;
  const Cycle zk = seq.tail_sums.front();
  const bool holds = zk == Cycle(r.z_num + seq.minimally_elliptic_cycle());
  // Z_K = Z_num + E forces m = 1 and conversely
  if (holds != (seq.m() == 1)) throw InvariantViolation("Z_K = Z_num + E but m != 1");
  return holds;
}

void require_multiplicity_hypotheses(const ClassificationReport& r, const Assumptions& a, const PgVerdict& pg) {
  if (r.rational()) throw HypothesisError("elliptic", "graph is rational");
  if (!r.elliptic()) throw HypothesisError("elliptic", "graph is not elliptic (chi(Z_num) < 0)");
  if (!r.numerically_gorenstein)
    throw HypothesisError("numerically_gorenstein", "graph is not numerically Gorenstein");
  if (!a.gorenstein)
    throw HypothesisError("gorenstein", "Gorenstein assumption not declared (--assume-gorenstein)");
  const long m_plus_one = static_cast<long>(*r.m_plus_one);
  if (!pg.is_exact(m_plus_one))
    throw HypothesisError("pg_equals_m_plus_one",
                          "p_g = m + 1 is not forced (needs m = 0 or H^1(A,Z) = 0)");
}

WithTrail<MultiplicityResult> multiplicity(const ResolutionGraph& g, const ClassificationReport& r,
                                           const Assumptions& a, const PgVerdict& pg) {
  require_multiplicity_hypotheses(r, a, pg);
  WithTrail<MultiplicityResult> out;
  const Integer d = -r.z_num_squared;
  if (d >= 2) {
    out.value.multiplicity = d;
  } else {
    out.value.multiplicity = 2;
    if (r.sequence->m() >= 1) {
      out.value.chain = check_chain_structure(g, intersection_form(g), *r.sequence);
      out.trail.push_back({"chain decomposition and base point curve", kChain, {"elliptic", "numerically_gorenstein"}});
    }
  }
  out.trail.push_back({"mult = " + out.value.multiplicity.str(), kMultiplicity, kMultiplicityHypotheses});
  return out;
}

WithTrail<Integer> embedding_dimension(const ResolutionGraph& g, const ClassificationReport& r,
                                       const Assumptions& a, const PgVerdict& pg,
                                       std::optional<Integer> min_chi) {
  require_multiplicity_hypotheses(r, a, pg);
  const Integer d = -r.z_num_squared;
  WithTrail<Integer> out{std::max(Integer(3), d), {}};
  const Integer mult = multiplicity(g, r, a, pg).value.multiplicity;
  if (mult >= 3 ? out.value != mult : out.value != 3)
    throw InvariantViolation("emb dim and multiplicity disagree");
  if (min_chi && out.value < mult + *min_chi)
    throw InvariantViolation("emb dim < mult + min chi");
  out.trail.push_back({"emb dim = " + out.value.str(), kEmbDim, kMultiplicityHypotheses});
  return out;
}

WithTrail<HilbertSamuelValue> hilbert_samuel(const ResolutionGraph& g, const ClassificationReport& r,
                                             const Assumptions& a, const PgVerdict& pg, long k) {
  require_multiplicity_hypotheses(r, a, pg);
  if (r.z_num_squared > -3)
    throw HypothesisError("z_num_squared_le_minus_3",
                          "Z_num^2 = " + r.z_num_squared.str() +
                              " > -3: no closed Hilbert-Samuel formula, see generator degrees");
  if (k < 1) throw PreconditionError("hilbert_samuel: k must be positive");
  const IntersectionForm f = intersection_form(g);
  const Integer d = -r.z_num_squared;
  auto colength = [&](long j) { return euler_char(f, Cycle(r.z_num * Integer(j))) + 1; };

  WithTrail<HilbertSamuelValue> out;
  out.value.colength = colength(k);
  out.value.graded = Integer(k) * d;
  if (colength(k + 1) - out.value.colength != out.value.graded)
    throw InvariantViolation("Hilbert-Samuel telescoping identity fails");
  out.trail.push_back({"dim O/m^k = chi(k Z_num) + 1, dim m^k/m^(k+1) = -k Z_num^2", kHilbert,
                       {"elliptic", "numerically_gorenstein", "gorenstein", "pg_equals_m_plus_one",
                        "z_num_squared_le_minus_3"}});
  return out;
}

WithTrail<std::vector<int>> generator_degrees(const ClassificationReport& r, const Assumptions& a,
                                              const PgVerdict& pg) {
  require_multiplicity_hypotheses(r, a, pg);
  const Integer d = -r.z_num_squared;
  WithTrail<std::vector<int>> out;
  if (d >= 3)
    out.value = {1};
  else if (d == 2)
    out.value = {1, 2};
  else
    out.value = {1, 2, 3};
  out.trail.push_back({"generator degrees", kGenerators, kMultiplicityHypotheses});
  return out;
}

WithTrail<AuxiliaryFlags> auxiliary_flags(const ClassificationReport& r) {
  if (!r.elliptic() || !r.numerically_gorenstein)
    throw PreconditionError("auxiliary flags require an elliptic numerically Gorenstein graph");
  const Integer& z2 = r.z_num_squared;
  WithTrail<AuxiliaryFlags> out;
  out.value.complete_intersection_possible = z2 == -4;
  out.value.not_complete_intersection = z2 <= -5;
  out.value.kodaira_graph = z2 == -1;
  out.value.hypersurface_excluded = z2 <= -4;
  if (out.value.complete_intersection_possible || out.value.not_complete_intersection)
    out.trail.push_back({"complete intersection flags", kCompleteIntersection, kMultiplicityHypotheses});
  if (out.value.kodaira_graph) out.trail.push_back({"Kodaira graph", kKodaira, kTopological});
  if (out.value.hypersurface_excluded)
    out.trail.push_back({"not a hypersurface", kHypersurface, kMultiplicityHypotheses});
  return out;
}

InvariantReport compute_invariants(const ResolutionGraph& g, const ClassificationReport& r,
                                   const Assumptions& a) {
  InvariantReport out;
  out.assumptions = a;
  auto append = [&out](const std::vector<TrailEntry>& t) {
    out.hypothesis_trail.insert(out.hypothesis_trail.end(), t.begin(), t.end());
  };

  GenusResult genus = geometric_genus(g, r, a);
  out.p_g = genus.verdict;
  append(genus.trail);

  if (r.numerically_gorenstein) {
    out.pg2_characterization = pg2_characterization(r);
    if (r.h1_link_zero && a.gorenstein && r.elliptic())
      out.hypothesis_trail.push_back(
          {*out.pg2_characterization ? "p_g = 2" : "p_g != 2", kPg2, {"gorenstein", "h1_link_zero"}});
  }
  if (r.elliptic() && r.numerically_gorenstein) {
    auto flags = auxiliary_flags(r);
    out.flags = flags.value;
    append(flags.trail);
  }

  try {
    require_multiplicity_hypotheses(r, a, out.p_g);
  } catch (const HypothesisError& e) {
    out.refused_hypothesis = e.hypothesis();
    out.refusal_reason = e.what();
    return out;
  }

  auto mult = multiplicity(g, r, a, out.p_g);
  out.multiplicity = mult.value.multiplicity;
  out.chain = mult.value.chain;
  if (out.chain) out.basepoint_vertex = out.chain->basepoint_vertex;
  append(mult.trail);

  auto emb = embedding_dimension(g, r, a, out.p_g, Integer(0));
  out.emb_dim = emb.value;
  append(emb.trail);

  HilbertDescriptor hs;
  auto gens = generator_degrees(r, a, out.p_g);
  hs.generator_degrees = gens.value;
  append(gens.trail);
  hs.closed_form = r.z_num_squared <= -3;
  if (hs.closed_form) {
    for (long k = 1; k <= 5; ++k) hs.first_values.push_back(hilbert_samuel(g, r, a, out.p_g, k).value);
    out.hypothesis_trail.push_back(hilbert_samuel(g, r, a, out.p_g, 1).trail.front());
  }
  out.hilbert_samuel = std::move(hs);
  return out;
}

}  // namespace resgraph
