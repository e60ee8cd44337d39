#include "resgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

namespace resgraph {

std::size_t ResolutionGraph::add_vertex(VertexData v) {
  vertices_.push_back(std::move(v));
  return vertices_.size() - 1;
}

void ResolutionGraph::add_edge(std::size_t a, std::size_t b, unsigned multiplicity) {
  if (a >= size() || b >= size()) throw PreconditionError("add_edge: vertex index out of range");
  if (a > b) std::swap(a, b);
  auto it = std::find_if(edges_.begin(), edges_.end(),
                         [&](const Edge& e) { return e.first == a && e.second == b; });
  if (it != edges_.end()) {
    it->multiplicity += multiplicity;
    return;
  }
  edges_.push_back({a, b, multiplicity});
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
}

std::optional<std::size_t> ResolutionGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

unsigned ResolutionGraph::multiplicity(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (const Edge& e : edges_)
    if (e.first == a && e.second == b) return e.multiplicity;
  return 0;
}

VertexSet ResolutionGraph::neighbours(std::size_t i) const {
  VertexSet out;
  for (const Edge& e : edges_) {
    if (e.first == e.second) continue;
    if (e.first == i) out.push_back(e.second);
    if (e.second == i) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ResolutionGraph::edge_count() const {
  std::size_t n = 0;
  for (const Edge& e : edges_) n += e.multiplicity;
  return n;
}

VertexSet ResolutionGraph::all_vertices() const {
  VertexSet all(size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

std::vector<VertexSet> ResolutionGraph::components(const VertexSet& subset) const {
  std::vector<char> inside(size(), 0), seen(size(), 0);
  for (std::size_t v : subset) inside.at(v) = 1;
  std::vector<VertexSet> out;
  for (std::size_t start : subset) {
    if (seen[start]) continue;
    VertexSet comp;
    std::queue<std::size_t> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (std::size_t w : neighbours(v)) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool ResolutionGraph::connected(const VertexSet& subset) const {
  return !subset.empty() && components(subset).size() == 1;
}

std::string ResolutionGraph::id_list(const VertexSet& subset) const {
  std::string out = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) out += ",";
    out += vertices_.at(subset[k]).id;
  }
  return out + "}";
}

// --- text format ----------------------------------------------------------

namespace {

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

template <typename T>
T parse_number(std::size_t line, std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line, "bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  return value;
}

struct PendingEdge {
  std::size_t line;
  std::string a, b;
};

}  // namespace

ResolutionGraph parse_graph(std::string_view text) {
  ResolutionGraph g;
  std::vector<PendingEdge> pending;
  std::map<std::string, std::size_t, std::less<>> ids;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() < 3) throw ParseError(line_no, "expected 'vertex <id> e=<int> ...'");
      if (!valid_id(tok[1])) throw ParseError(line_no, "invalid vertex id '" + tok[1] + "'");
      if (ids.count(tok[1])) throw ParseError(line_no, "duplicate vertex id '" + tok[1] + "'");
      VertexData v;
      v.id = tok[1];
      bool have_e = false;
      std::map<std::string, bool> seen;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        auto eq = tok[k].find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + tok[k] + "'");
        std::string key = tok[k].substr(0, eq);
        std::string_view value = std::string_view(tok[k]).substr(eq + 1);
        if (seen[key]) throw ParseError(line_no, "attribute '" + key + "' given twice");
        seen[key] = true;
        if (key == "e") {
          v.self_int = parse_number<long>(line_no, key, value);
          have_e = true;
        } else if (key == "g") {
          v.genus = parse_number<unsigned>(line_no, key, value);
        } else if (key == "nodes") {
          v.nodes = parse_number<unsigned>(line_no, key, value);
        } else if (key == "cusps") {
          v.cusps = parse_number<unsigned>(line_no, key, value);
        } else {
          throw ParseError(line_no, "unknown attribute '" + key + "'");
        }
      }
      if (!have_e) throw ParseError(line_no, "vertex '" + v.id + "' is missing e=<int>");
      ids.emplace(v.id, g.size());
      g.add_vertex(std::move(v));
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
      if (tok[1] == tok[2])
        throw ParseError(line_no, "self-loop edge on '" + tok[1] + "' (encode as nodes=)");
      pending.push_back({line_no, tok[1], tok[2]});
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }

  for (const PendingEdge& e : pending) {
    auto a = ids.find(e.a), b = ids.find(e.b);
    if (a == ids.end()) throw ParseError(e.line, "edge references unknown vertex '" + e.a + "'");
    if (b == ids.end()) throw ParseError(e.line, "edge references unknown vertex '" + e.b + "'");
    g.add_edge(a->second, b->second);
  }
  return g;
}

ResolutionGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize(const ResolutionGraph& g) {
  std::ostringstream out;
  for (const VertexData& v : g.vertices()) {
    out << "vertex " << v.id << " e=" << v.self_int;
    if (v.genus) out << " g=" << v.genus;
    if (v.nodes) out << " nodes=" << v.nodes;
    if (v.cusps) out << " cusps=" << v.cusps;
    out << '\n';
  }
  for (const Edge& e : g.edges())
    for (unsigned k = 0; k < e.multiplicity; ++k)
      out << "edge " << g.vertex(e.first).id << ' ' << g.vertex(e.second).id << '\n';
  return out.str();
}

// --- lattice --------------------------------------------------------------

IntersectionForm intersection_form(const ResolutionGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  IntersectionForm f;
  f.matrix = IntegerMatrix::Zero(n, n);
  f.k_degrees = IntegerVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const VertexData& v = g.vertex(static_cast<std::size_t>(i));
    f.matrix(i, i) = v.self_int;
    // adjunction: K.A_i = -A_i^2 - 2 + 2 g_i + 2 delta_i
    f.k_degrees(i) = Integer(-v.self_int) - 2 + 2 * Integer(v.genus) + 2 * Integer(v.delta());
  }
  for (const Edge& e : g.edges()) {
    if (e.first == e.second) continue;
    const auto a = static_cast<Eigen::Index>(e.first), b = static_cast<Eigen::Index>(e.second);
    f.matrix(a, b) += e.multiplicity;
    f.matrix(b, a) += e.multiplicity;
  }
  return f;
}

bool is_negative_definite(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) return false;
  if (m != m.transpose()) return false;
  const auto minors = leading_principal_minors(m);
  if (static_cast<Eigen::Index>(minors.size()) != m.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) * det_k > 0 with 1-based k
    const bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

// --- validation -----------------------------------------------------------

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::empty_graph: return "empty_graph";
    case ViolationKind::duplicate_id: return "duplicate_id";
    case ViolationKind::self_loop: return "self_loop";
    case ViolationKind::nonnegative_self_intersection: return "nonnegative_self_intersection";
    case ViolationKind::contractible_curve: return "contractible_curve";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::not_negative_definite: return "not_negative_definite";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate(const ResolutionGraph& g, const ValidationOptions& options) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string msg) {
    report.violations.push_back({k, std::move(msg)});
  };
  if (g.size() == 0) {
    add(ViolationKind::empty_graph, "graph has no vertices");
    return report;
  }

  std::map<std::string, int> seen;
  for (const VertexData& v : g.vertices())
    if (seen[v.id]++ == 1) add(ViolationKind::duplicate_id, "duplicate vertex id '" + v.id + "'");

  for (const Edge& e : g.edges())
    if (e.first == e.second)
      add(ViolationKind::self_loop, "self-loop edge on '" + g.vertex(e.first).id + "'");

  for (const VertexData& v : g.vertices()) {
    if (v.self_int > -1)
      add(ViolationKind::nonnegative_self_intersection,
          "vertex '" + v.id + "' has self-intersection " + std::to_string(v.self_int) + " > -1");
    if (v.self_int == -1 && v.smooth_rational()) {
      Violation c{ViolationKind::contractible_curve,
                  "vertex '" + v.id + "' is a contractible smooth rational -1 curve"};
      if (options.allow_nonminimal)
        report.warnings.push_back(std::move(c));
      else
        report.violations.push_back(std::move(c));
    }
  }

  if (!g.connected()) add(ViolationKind::disconnected, "graph is not connected");
  if (!is_negative_definite(intersection_form(g)))
    add(ViolationKind::not_negative_definite, "intersection form is not negative definite");
  return report;
}

void require_valid(const ResolutionGraph& g, const ValidationOptions& options) {
  const ValidationReport r = validate(g, options);
  if (!r.ok()) throw InvalidGraph(r.violations.front().message);
}

}  // namespace resgraph
