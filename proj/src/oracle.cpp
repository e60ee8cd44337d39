#include "resgraph/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace resgraph {

using Vec64 = Vector<std::int64_t>;
using Mat64 = Matrix<std::int64_t>;

std::uint64_t enumeration_limit_from_env() {
  const char* env = std::getenv("RESGRAPH_ORACLE_LIMIT");
  if (!env || !*env) return kDefaultEnumerationLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw PreconditionError(std::string("RESGRAPH_ORACLE_LIMIT is not a positive integer: ") + env);
  return v;
}

// --- bounds ---------------------------------------------------------------

namespace {

Integer ceil_positive(const Rational& q) {
  const Integer n = numerator(q), d = denominator(q);
  Integer c = n / d;
  if (c * d != n && q > 0) c += 1;
  return c;
}

}  // namespace

SearchBound SearchBound::default_for(const ResolutionGraph& g) {
  const IntersectionForm f = intersection_form(g);
  const Cycle zn = fundamental_cycle(g, f, g.all_vertices()).cycle;
  const CanonicalCycle zk = canonical_cycle(g, f);
  SearchBound b;
  b.cap = zn;
  for (Eigen::Index i = 0; i < zn.size(); ++i) b.cap(i) += ceil_positive(zk.rational(i));
  b.support = g.all_vertices();
  b.origin = Origin::default_cap;
  return b;
}

SearchBound SearchBound::multiple_of_znum(const ResolutionGraph& g, long n) {
  if (n < 1) throw PreconditionError("search bound multiple must be positive");
  SearchBound b;
  b.cap = fundamental_cycle(g).cycle * Integer(n);
  b.support = g.all_vertices();
  b.origin = Origin::multiple;
  b.factor = n;
  return b;
}

SearchBound SearchBound::explicit_cap(Cycle cap) {
  SearchBound b;
  b.support.resize(static_cast<std::size_t>(cap.size()));
  for (std::size_t i = 0; i < b.support.size(); ++i) b.support[i] = i;
  b.cap = std::move(cap);
  b.origin = Origin::explicit_cap;
  return b;
}

SearchBound SearchBound::parse(const ResolutionGraph& g, const std::string& text) {
  if (text.empty() || text == "default") return default_for(g);
  if (text.back() == 'z') {
    const std::string digits = text.substr(0, text.size() - 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
      return multiple_of_znum(g, std::stol(digits));
  }
  Cycle cap(static_cast<Eigen::Index>(g.size()));
  std::stringstream in(text);
  std::string item;
  Eigen::Index i = 0;
  while (std::getline(in, item, ',')) {
    if (i >= cap.size()) throw PreconditionError("oracle cap has more entries than vertices");
    try {
      cap(i++) = Integer(item);
    } catch (const std::exception&) {
      throw PreconditionError("oracle cap entry '" + item + "' is not an integer");
    }
  }
  if (i != cap.size()) throw PreconditionError("oracle cap has fewer entries than vertices");
  return explicit_cap(std::move(cap));
}

std::string SearchBound::describe() const {
  std::ostringstream out;
  switch (origin) {
    case Origin::default_cap: out << "Z_K + Z_num"; break;
    case Origin::multiple: out << factor << " * Z_num"; break;
    case Origin::explicit_cap: out << "explicit"; break;
  }
  out << " = (";
  for (Eigen::Index i = 0; i < cap.size(); ++i) out << (i ? "," : "") << cap(i);
  out << ")";
  return out.str();
}

std::uint64_t SearchBound::box_size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (std::size_t i : support) {
    const Integer c = cap(static_cast<Eigen::Index>(i)) + 1;
    if (c <= 0) return 0;
    if (c > Integer(kMax / n)) return kMax;
    n *= c.convert_to<std::uint64_t>();
  }
  return n - 1;
}

// --- enumeration ----------------------------------------------------------

namespace {

Mat64 to_mat64(const IntegerMatrix& m) {
  Mat64 out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

Vec64 to_vec64(const IntegerVector& v) {
  Vec64 out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_int64(v(i));
  return out;
}

Cycle to_cycle(const Vec64& v) { return v.cast<Integer>(); }

void check_bound(const SearchBound& bound, const OracleOptions& options) {
  if (bound.support.empty()) throw PreconditionError("search bound has empty support");
  std::vector<char> on(static_cast<std::size_t>(bound.cap.size()), 0);
  for (std::size_t i : bound.support) {
    if (i >= on.size()) throw PreconditionError("search bound support out of range");
    on[i] = 1;
  }
  for (Eigen::Index i = 0; i < bound.cap.size(); ++i) {
    const bool inside = on[static_cast<std::size_t>(i)];
    if (inside && bound.cap(i) <= 0)
      throw PreconditionError("search bound cap must be positive on its support");
    if (!inside && bound.cap(i) != 0)
      throw PreconditionError("search bound cap must vanish off its support");
  }
  if (bound.box_size() > options.limit)
    throw LimitExceeded("search box holds " + std::to_string(bound.box_size()) +
                        " cycles, over the limit of " + std::to_string(options.limit) +
                        " (raise RESGRAPH_ORACLE_LIMIT)");
}

// Odometer over the box; keeps image = M * D up to date incrementally.
template <typename Visit>
void scan_box(const SearchBound& bound, const OracleOptions& options, const Mat64* matrix,
              Visit&& visit) {
  check_bound(bound, options);
  const Vec64 cap = to_vec64(bound.cap);
  Vec64 d = Vec64::Zero(cap.size());
  Vec64 image = Vec64::Zero(cap.size());
  const auto& sup = bound.support;
  for (;;) {
    std::size_t k = sup.size();
    while (k > 0) {
      const auto i = static_cast<Eigen::Index>(sup[k - 1]);
      if (d(i) < cap(i)) {
        d(i) += 1;
        if (matrix) image += matrix->col(i);
        break;
      }
      if (matrix) image -= matrix->col(i) * d(i);
      d(i) = 0;
      --k;
    }
    if (k == 0) return;
    visit(static_cast<const Vec64&>(d), static_cast<const Vec64&>(image));
  }
}

struct Lattice64 {
  Mat64 matrix;
  Vec64 k;

  explicit Lattice64(const ResolutionGraph& g) {
    const IntersectionForm f = intersection_form(g);
    matrix = to_mat64(f.matrix);
    k = to_vec64(f.k_degrees);
  }
  // chi(D) = -(D.D + D.K) / 2
  std::int64_t chi(const Vec64& d, const Vec64& image) const {
    return -(d.dot(image) + d.dot(k)) / 2;
  }
};

bool leq64(const Vec64& a, const Vec64& b) { return (a.array() <= b.array()).all(); }

void sort_cycles(std::vector<Cycle>& v) {
  std::sort(v.begin(), v.end(), [](const Cycle& a, const Cycle& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
}

}  // namespace

void for_each_cycle(const SearchBound& bound, const OracleOptions& options,
                    const std::function<void(const Vec64&)>& visit) {
  scan_box(bound, options, nullptr, [&](const Vec64& d, const Vec64&) { visit(d); });
}

std::vector<Cycle> enumerate_cycles(const SearchBound& bound, const OracleOptions& options) {
  std::vector<Cycle> out;
  for_each_cycle(bound, options, [&](const Vec64& d) { out.push_back(to_cycle(d)); });
  return out;
}

MinChi min_chi_bruteforce(const ResolutionGraph& g, const SearchBound& bound,
                          const OracleOptions& options) {
  const Lattice64 lat(g);
  std::optional<std::int64_t> best;
  Vec64 witness;
  scan_box(bound, options, &lat.matrix, [&](const Vec64& d, const Vec64& image) {
    const std::int64_t c = lat.chi(d, image);
    if (!best || c < *best) {
      best = c;
      witness = d;
    }
  });
  if (!best) throw PreconditionError("min_chi_bruteforce: empty search box");
  return {Integer(*best), to_cycle(witness), true};
}

std::vector<Cycle> antinef_cycles(const ResolutionGraph& g, const VertexSet& subset,
                                  const SearchBound& bound, const OracleOptions& options) {
  const Lattice64 lat(g);
  std::vector<Cycle> out;
  scan_box(bound, options, &lat.matrix, [&](const Vec64& d, const Vec64& image) {
    for (std::size_t i : subset)
      if (image(static_cast<Eigen::Index>(i)) > 0) return;
    out.push_back(to_cycle(d));
  });
  return out;
}

Cycle fundamental_cycle_bruteforce(const ResolutionGraph& g, const VertexSet& subset,
                                   const Cycle& reference, const OracleOptions& options) {
  if (subset.empty() || !g.connected(subset))
    throw PreconditionError("fundamental_cycle_bruteforce: subset must be connected");
  SearchBound bound;
  bound.cap = Cycle::Zero(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i : subset) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (reference(ii) <= 0)
      throw PreconditionError("fundamental_cycle_bruteforce: reference must be positive on the subset");
    bound.cap(ii) = 2 * reference(ii);
  }
  bound.support = subset;
  bound.origin = SearchBound::Origin::explicit_cap;

  const Lattice64 lat(g);
  std::optional<Vec64> lowest;
  scan_box(bound, options, &lat.matrix, [&](const Vec64& d, const Vec64& image) {
    for (std::size_t i : subset)
      if (image(static_cast<Eigen::Index>(i)) > 0) return;
    if (!lowest)
      lowest = d;
    else
      *lowest = lowest->cwiseMin(d);
  });
  if (!lowest) throw InvariantViolation("fundamental_cycle_bruteforce: no anti-nef cycle in the box");
  return to_cycle(*lowest);
}

std::vector<Cycle> minimally_elliptic_bruteforce(const ResolutionGraph& g, const SearchBound& bound,
                                                 const OracleOptions& options) {
  const Lattice64 lat(g);
  std::vector<std::pair<Vec64, std::int64_t>> nonpositive;
  scan_box(bound, options, &lat.matrix, [&](const Vec64& d, const Vec64& image) {
    const std::int64_t c = lat.chi(d, image);
    if (c <= 0) nonpositive.emplace_back(d, c);
  });
  std::vector<Cycle> out;
  for (const auto& [e, chi] : nonpositive) {
    if (chi != 0) continue;
    const bool minimal = std::none_of(nonpositive.begin(), nonpositive.end(), [&](const auto& other) {
      return other.first != e && leq64(other.first, e);
    });
    if (minimal) out.push_back(to_cycle(e));
  }
  sort_cycles(out);
  return out;
}

SequenceCharacterization sequence_characterization_check(const ResolutionGraph& g,
                                                         const EllipticSequence& seq,
                                                         const OracleOptions& options) {
  const Cycle zk = seq.tail_sums.front();
  const Lattice64 lat(g);
  const Vec64 zk64 = to_vec64(zk);
  const Vec64 zk_image = lat.matrix * zk64;

  SequenceCharacterization out;
  const Cycle zero = Cycle::Zero(zk.size());
  // Z = 0 satisfies both conditions vacuously
  out.antinef_below_zk.push_back(zero);
  out.canonical_like.push_back(zero);

  SearchBound bound = SearchBound::explicit_cap(zk);
  scan_box(bound, options, &lat.matrix, [&](const Vec64& d, const Vec64& image) {
    if ((image.array() <= 0).all()) out.antinef_below_zk.push_back(to_cycle(d));
    bool canonical_like = true;
    for (Eigen::Index i = 0; i < d.size(); ++i)
      if (d(i) != 0 && image(i) - zk_image(i) < 0) canonical_like = false;
    if (canonical_like) out.canonical_like.push_back(to_cycle(d));
  });

  out.expected_partial_sums.push_back(zero);
  out.expected_tail_sums.push_back(zero);
  for (const Cycle& c : seq.partial_sums) out.expected_partial_sums.push_back(c);
  for (const Cycle& c : seq.tail_sums) out.expected_tail_sums.push_back(c);
  for (auto* v : {&out.antinef_below_zk, &out.canonical_like, &out.expected_partial_sums,
                  &out.expected_tail_sums})
    sort_cycles(*v);
  out.passed = out.antinef_below_zk == out.expected_partial_sums &&
               out.canonical_like == out.expected_tail_sums;
  return out;
}

}  // namespace resgraph
