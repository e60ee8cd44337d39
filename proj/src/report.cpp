#include "resgraph/report.hpp"

#include <sstream>

namespace resgraph {

using json = nlohmann::ordered_json;

namespace {

json ids(const ResolutionGraph& g, const VertexSet& s) {
  json out = json::array();
  for (std::size_t v : s) out.push_back(g.vertex(v).id);
  return out;
}

json optional_id(const ResolutionGraph& g, const std::optional<std::size_t>& v) {
  return v ? json(g.vertex(*v).id) : json(nullptr);
}

std::string_view case_name(StructureCase c) {
  return c == StructureCase::distinguished_vertex ? "distinguished_vertex" : "all_smooth_rational";
}

std::string_view pg_kind(PgVerdict::Kind k) {
  switch (k) {
    case PgVerdict::Kind::exact: return "exact";
    case PgVerdict::Kind::range: return "range";
    case PgVerdict::Kind::undetermined: return "undetermined";
  }
  return "undetermined";
}

json trail_json(const std::vector<TrailEntry>& trail) {
  json out = json::array();
  for (const TrailEntry& t : trail)
    out.push_back({{"claim", t.claim}, {"reference", t.reference}, {"hypotheses", t.hypotheses}});
  return out;
}

json pg_json(const PgVerdict& v) {
  json out;
  out["kind"] = pg_kind(v.kind);
  out["lo"] = v.kind == PgVerdict::Kind::undetermined ? json(nullptr) : json(v.lo);
  out["hi"] = v.kind == PgVerdict::Kind::undetermined ? json(nullptr) : json(v.hi);
  out["note"] = v.note.empty() ? json(nullptr) : json(v.note);
  return out;
}

json validation_json(const ValidationReport& r) {
  auto list = [](const std::vector<Violation>& vs) {
    json out = json::array();
    for (const Violation& v : vs) out.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    return out;
  };
  return {{"valid", r.ok()}, {"violations", list(r.violations)}, {"warnings", list(r.warnings)}};
}

json classification_json(const ResolutionGraph& g, const ClassificationReport& r) {
  json out;
  out["chi_znum"] = json_integer(r.chi_znum);
  out["class"] = to_string(r.singularity_class);
  out["du_val"] = r.du_val;
  out["numerically_gorenstein"] = r.numerically_gorenstein;
  out["minimally_elliptic"] = r.minimally_elliptic;
  out["h1_link_zero"] = r.h1_link_zero;
  out["m_plus_one"] = r.m_plus_one ? json(*r.m_plus_one) : json(nullptr);
  out["z_num"] = json_cycle(r.z_num);
  out["z_num_squared"] = json_integer(r.z_num_squared);
  out["z_k"] = json_rational_cycle(r.z_k);
  out["minimally_elliptic_cycle"] =
      r.sequence ? json_cycle(r.sequence->minimally_elliptic_cycle()) : json(nullptr);
  if (r.structure) {
    json comps = json::array();
    for (const VertexSet& c : r.structure->rational_components) comps.push_back(ids(g, c));
    out["structure_case"] = {{"case", case_name(r.structure->which)},
                             {"distinguished", optional_id(g, r.structure->distinguished)},
                             {"components_checked", r.structure->components_checked},
                             {"rational_components", comps}};
  } else {
    out["structure_case"] = nullptr;
  }
  return out;
}

json sequence_json(const ResolutionGraph& g, const EllipticSequence& seq) {
  json out = json::array();
  for (const EllipticMember& m : seq.members)
    out.push_back({{"support", ids(g, m.support)}, {"cycle", json_cycle(m.cycle)}});
  return out;
}

json hs_value_json(const HilbertSamuelValue& v) {
  return {{"colength", json_integer(v.colength)}, {"graded", json_integer(v.graded)}};
}

json invariants_json(const ResolutionGraph& g, const InvariantReport& r) {
  json out;
  out["p_g"] = pg_json(r.p_g);
  out["pg2_characterization"] = r.pg2_characterization ? json(*r.pg2_characterization) : json(nullptr);
  out["multiplicity"] = r.multiplicity ? json_integer(*r.multiplicity) : json(nullptr);
  out["emb_dim"] = r.emb_dim ? json_integer(*r.emb_dim) : json(nullptr);
  if (r.hilbert_samuel) {
    json values = json::array();
    long k = 1;
    for (const HilbertSamuelValue& v : r.hilbert_samuel->first_values) {
      json item = {{"k", k++}};
      item.update(hs_value_json(v));
      values.push_back(item);
    }
    out["hilbert_samuel"] = {{"closed_form", r.hilbert_samuel->closed_form},
                             {"values", values},
                             {"generator_degrees", r.hilbert_samuel->generator_degrees}};
  } else {
    out["hilbert_samuel"] = nullptr;
  }
  if (r.flags) {
    out["flags"] = {{"complete_intersection_possible", r.flags->complete_intersection_possible},
                    {"not_complete_intersection", r.flags->not_complete_intersection},
                    {"kodaira_graph", r.flags->kodaira_graph},
                    {"hypersurface_excluded", r.flags->hypersurface_excluded}};
  } else {
    out["flags"] = nullptr;
  }
  if (r.chain) {
    json chain = json::array();
    for (std::size_t v : r.chain->chain) chain.push_back(g.vertex(v).id);
    out["chain"] = {{"gammas", chain}, {"attach_vertex", g.vertex(r.chain->attach_vertex).id}};
  } else {
    out["chain"] = nullptr;
  }
  out["basepoint_vertex"] = optional_id(g, r.basepoint_vertex);
  out["refused_hypothesis"] = r.refused_hypothesis ? json(*r.refused_hypothesis) : json(nullptr);
  out["refusal_reason"] = r.refusal_reason ? json(*r.refusal_reason) : json(nullptr);
  out["hypothesis_trail"] = trail_json(r.hypothesis_trail);
  return out;
}

}  // namespace

json json_integer(const Integer& x) {
  static const Integer kSafe = (Integer(1) << 53) - 1;
  if (x <= kSafe && x >= -kSafe) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

json json_cycle(const Cycle& c) {
  json out = json::array();
  for (Eigen::Index i = 0; i < c.size(); ++i) out.push_back(json_integer(c(i)));
  return out;
}

json json_rational_cycle(const RationalCycle& c) {
  json out = json::array();
  for (Eigen::Index i = 0; i < c.size(); ++i)
    out.push_back(is_integral(c(i)) ? json_integer(numerator(c(i))) : json(c(i).str()));
  return out;
}

json to_json(const ReportDocument& doc) {
  const ResolutionGraph& g = *doc.graph;
  json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = doc.command;
  out["assumptions"] = {{"gorenstein", doc.assumptions.gorenstein}};
  out["graph"] = serialize(g);
  json vertices = json::array();
  for (const VertexData& v : g.vertices()) vertices.push_back(v.id);
  out["vertices"] = vertices;
  out["validation"] = doc.validation ? validation_json(*doc.validation) : json(nullptr);
  out["classification"] =
      doc.classification ? classification_json(g, *doc.classification) : json(nullptr);
  if (doc.genus) {
    out["geometric_genus"] = {{"p_g", pg_json(doc.genus->verdict)},
                              {"hypothesis_trail", trail_json(doc.genus->trail)}};
  } else {
    out["geometric_genus"] = nullptr;
  }
  out["sequence"] = doc.include_sequence && doc.classification && doc.classification->sequence
                        ? sequence_json(g, *doc.classification->sequence)
                        : json(nullptr);
  out["invariants"] = doc.invariants ? invariants_json(g, *doc.invariants) : json(nullptr);
  if (doc.hilbert) {
    json h = {{"k", doc.hilbert->k}};
    h.update(hs_value_json(doc.hilbert->value));
    out["hilbert"] = h;
  } else {
    out["hilbert"] = nullptr;
  }
  if (doc.oracle) {
    json rows = json::array();
    for (const VerificationRow& r : *doc.oracle)
      rows.push_back({{"check", r.check}, {"status", to_string(r.status)}, {"detail", r.detail}});
    out["oracle"] = rows;
  } else {
    out["oracle"] = nullptr;
  }
  return out;
}

std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string format_cycle(const Cycle& c) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < c.size(); ++i) out << (i ? "," : "") << c(i);
  out << ")";
  return out.str();
}

std::string format_rational_cycle(const RationalCycle& c) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < c.size(); ++i) out << (i ? "," : "") << c(i).str();
  out << ")";
  return out.str();
}

std::string format_pg(const PgVerdict& v) {
  switch (v.kind) {
    case PgVerdict::Kind::exact: return "exact(" + std::to_string(v.lo) + ")";
    case PgVerdict::Kind::range:
      return "range(" + std::to_string(v.lo) + "," + std::to_string(v.hi) + ")";
    case PgVerdict::Kind::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

void text_trail(std::ostream& out, const std::vector<TrailEntry>& trail) {
  for (const TrailEntry& t : trail) {
    out << "  - " << t.claim << "  [" << t.reference << "]";
    if (!t.hypotheses.empty()) {
      out << " using ";
      for (std::size_t i = 0; i < t.hypotheses.size(); ++i) out << (i ? ", " : "") << t.hypotheses[i];
    } else {
      out << " (topological)";
    }
    out << '\n';
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const ReportDocument& doc) {
  const ResolutionGraph& g = *doc.graph;
  std::ostringstream out;
  out << "graph: " << g.size() << " vertices (";
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g.vertex(i).id;
  out << "), " << g.edge_count() << " edges\n";
  if (doc.assumptions.gorenstein) out << "assumption: Gorenstein\n";

  if (doc.validation) {
    out << "valid: " << yes_no(doc.validation->ok()) << '\n';
    for (const Violation& v : doc.validation->violations)
      out << "  violation [" << to_string(v.kind) << "]: " << v.message << '\n';
    for (const Violation& v : doc.validation->warnings)
      out << "  warning [" << to_string(v.kind) << "]: " << v.message << '\n';
  }

  if (const auto& c = doc.classification) {
    out << "chi(Z_num) = " << c->chi_znum << '\n';
    out << "class: " << to_string(c->singularity_class) << '\n';
    out << "Z_num = " << format_cycle(c->z_num) << '\n';
    out << "Z_num^2 = " << c->z_num_squared << '\n';
    out << "Z_K = " << format_rational_cycle(c->z_k) << '\n';
    out << "numerically Gorenstein: " << yes_no(c->numerically_gorenstein) << '\n';
    out << "Du Val: " << yes_no(c->du_val) << '\n';
    out << "minimally elliptic: " << yes_no(c->minimally_elliptic) << '\n';
    out << "H^1(A,Z) = 0: " << yes_no(c->h1_link_zero) << '\n';
    if (c->m_plus_one) out << "m+1 = " << *c->m_plus_one << '\n';
    if (c->sequence) out << "E = " << format_cycle(c->sequence->minimally_elliptic_cycle()) << '\n';
    if (c->structure) {
      out << "structure: " << case_name(c->structure->which);
      if (c->structure->distinguished) out << " (" << g.vertex(*c->structure->distinguished).id << ")";
      out << '\n';
    }
  }

  if (doc.genus) {
    out << "p_g = " << format_pg(doc.genus->verdict);
    if (!doc.genus->verdict.note.empty()) out << "  (" << doc.genus->verdict.note << ")";
    out << '\n';
    text_trail(out, doc.genus->trail);
  }

  if (doc.include_sequence && doc.classification && doc.classification->sequence) {
    const EllipticSequence& seq = *doc.classification->sequence;
    out << "elliptic sequence (m = " << seq.m() << "):\n";
    for (std::size_t j = 0; j < seq.members.size(); ++j)
      out << "  Z_B" << j << " = " << format_cycle(seq.members[j].cycle) << "  on "
          << g.id_list(seq.members[j].support) << '\n';
    for (std::size_t t = 0; t < seq.members.size(); ++t)
      out << "  C_" << t << " = " << format_cycle(seq.partial_sums[t]) << "  C'_" << t << " = "
          << format_cycle(seq.tail_sums[t]) << '\n';
  }

  if (const auto& inv = doc.invariants) {
    out << "p_g = " << format_pg(inv->p_g);
    if (!inv->p_g.note.empty()) out << "  (" << inv->p_g.note << ")";
    out << '\n';
    if (inv->pg2_characterization)
      out << "Z_K = Z_num + E: " << yes_no(*inv->pg2_characterization) << '\n';
    if (inv->multiplicity) out << "multiplicity = " << *inv->multiplicity << '\n';
    if (inv->emb_dim) out << "embedding dimension = " << *inv->emb_dim << '\n';
    if (inv->hilbert_samuel) {
      out << "generator degrees = {";
      const auto& d = inv->hilbert_samuel->generator_degrees;
      for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
      out << "}\n";
      long k = 1;
      for (const HilbertSamuelValue& v : inv->hilbert_samuel->first_values)
        out << "  k=" << k++ << ": dim O/m^k = " << v.colength << ", dim m^k/m^(k+1) = " << v.graded
            << '\n';
    }
    if (inv->flags) {
      out << "flags:";
      if (inv->flags->complete_intersection_possible) out << " complete_intersection_possible";
      if (inv->flags->not_complete_intersection) out << " not_complete_intersection";
      if (inv->flags->kodaira_graph) out << " kodaira_graph";
      if (inv->flags->hypersurface_excluded) out << " hypersurface_excluded";
      out << '\n';
    }
    if (inv->chain) {
      out << "chain gamma_0..gamma_{m-1} = (";
      for (std::size_t i = 0; i < inv->chain->chain.size(); ++i)
        out << (i ? "," : "") << g.vertex(inv->chain->chain[i]).id;
      out << "), attached at " << g.vertex(inv->chain->attach_vertex).id << '\n';
    }
    if (inv->basepoint_vertex) out << "base point on: " << g.vertex(*inv->basepoint_vertex).id << '\n';
    if (inv->refusal_reason) out << "multiplicity theorem refused: " << *inv->refusal_reason << '\n';
    out << "hypothesis trail:\n";
    text_trail(out, inv->hypothesis_trail);
  }

  if (doc.hilbert) {
    out << "k = " << doc.hilbert->k << ": dim O/m^k = " << doc.hilbert->value.colength
        << ", dim m^k/m^(k+1) = " << doc.hilbert->value.graded << '\n';
  }

  if (doc.oracle) {
    for (const VerificationRow& r : *doc.oracle)
      out << "[" << to_string(r.status) << "] " << r.check << ": " << r.detail << '\n';
  }
  return out.str();
}

std::string summary_line(const std::string& name, const ClassificationReport& r) {
  std::ostringstream out;
  out << name << ": " << to_string(r.singularity_class) << " chi=" << r.chi_znum
      << " Z_num=" << format_cycle(r.z_num) << " Z_num^2=" << r.z_num_squared
      << " Z_K=" << format_rational_cycle(r.z_k) << " NG=" << yes_no(r.numerically_gorenstein);
  if (r.m_plus_one) out << " m+1=" << *r.m_plus_one;
  return out.str();
}

}  // namespace resgraph
