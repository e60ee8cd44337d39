// graph.hpp
// Weighted dual resolution graphs, their text format, validation, and the
// intersection lattice they define.

#ifndef RESGRAPH_GRAPH_HPP
#define RESGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgraph/exact.hpp"

namespace resgraph {

/// One irreducible exceptional curve A_i.
struct VertexData {
  std::string id;
  long self_int = 0;  // e_i = A_i^2
  unsigned genus = 0;
  unsigned nodes = 0;
  unsigned cusps = 0;

  unsigned delta() const { return nodes + cusps; }
  bool smooth_rational() const { return genus == 0 && nodes == 0 && cusps == 0; }
};

/// Unordered pair of distinct vertices, stored with first < second.
struct Edge {
  std::size_t first = 0;
  std::size_t second = 0;
  unsigned multiplicity = 1;  // A_i . A_j
};

using VertexSet = std::vector<std::size_t>;  // sorted, duplicate-free

class ResolutionGraph {
 public:
  ResolutionGraph() = default;

  /// Appends a vertex; the index it receives is its coefficient position.
  std::size_t add_vertex(VertexData v);
  /// Adds `multiplicity` to the intersection count of the pair. Self-loops are
  /// recorded as-is so that validate() can report them.
  void add_edge(std::size_t a, std::size_t b, unsigned multiplicity = 1);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexData>& vertices() const { return vertices_; }
  const VertexData& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Intersection count A_i . A_j for i != j.
  unsigned multiplicity(std::size_t a, std::size_t b) const;
  /// Neighbours of i (without multiplicity), ascending.
  VertexSet neighbours(std::size_t i) const;
  /// Sum of edge multiplicities.
  std::size_t edge_count() const;

  VertexSet all_vertices() const;
  /// True iff `subset` is non-empty and induces a connected subgraph.
  bool connected(const VertexSet& subset) const;
  bool connected() const { return connected(all_vertices()); }
  /// Connected components of the subgraph induced on `subset`.
  std::vector<VertexSet> components(const VertexSet& subset) const;

  std::string id_list(const VertexSet& subset) const;

 private:
  std::vector<VertexData> vertices_;
  std::vector<Edge> edges_;
};

ResolutionGraph parse_graph(std::string_view text);
ResolutionGraph read_graph_file(const std::string& path);

/// Canonical text form: vertices in index order with non-default attributes
/// only, then one `edge` line per unit of multiplicity sorted by endpoints.
std::string serialize(const ResolutionGraph& g);

struct IntersectionForm {
  IntegerMatrix matrix;
  IntegerVector k_degrees;  // K . A_i by adjunction

  std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }

  /// A_i . D
  template <typename Derived>
  Integer dot_vertex(std::size_t i, const Eigen::MatrixBase<Derived>& d) const {
    return matrix.row(static_cast<Eigen::Index>(i)).dot(d);
  }
  /// D . D'
  template <typename DerivedA, typename DerivedB>
  Integer dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) const {
    return a.dot(matrix * b);
  }
  /// D . K
  template <typename Derived>
  Integer dot_canonical(const Eigen::MatrixBase<Derived>& d) const {
    return d.dot(k_degrees);
  }
};

IntersectionForm intersection_form(const ResolutionGraph& g);

/// All leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntegerMatrix& m);
inline bool is_negative_definite(const IntersectionForm& f) {
  return is_negative_definite(f.matrix);
}

enum class ViolationKind {
  empty_graph,
  duplicate_id,
  self_loop,
  nonnegative_self_intersection,
  contractible_curve,
  disconnected,
  not_negative_definite,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationOptions {
  bool allow_nonminimal = false;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // downgraded violations (--allow-nonminimal)

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
};

ValidationReport validate(const ResolutionGraph& g, const ValidationOptions& options = {});

/// Throws InvalidGraph carrying the first violation unless `g` validates.
void require_valid(const ResolutionGraph& g, const ValidationOptions& options = {});

}  // namespace resgraph

#endif  // RESGRAPH_GRAPH_HPP
