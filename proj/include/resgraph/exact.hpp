// exact.hpp
// Exact scalar types and fraction-free dense linear algebra.
//
// Every quantity in this library is an integer or a rational number; the
// dense containers are plain Eigen matrices over those scalars. Floating
// point never appears.

#ifndef RESGRAPH_EXACT_HPP
#define RESGRAPH_EXACT_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/errors.hpp"

namespace resgraph {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerVector = Vector<Integer>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = Vector<Rational>;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

/// Converts to a machine integer, throwing when the value does not fit.
inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw LimitExceeded("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..n-1.
///
/// Bareiss elimination without pivoting: the pivot at step k is exactly the
/// k-th leading minor, and every intermediate division is exact. Stops at the
/// first vanishing minor; the returned vector then ends with that zero.
template <typename Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  std::vector<Scalar> minors;
  minors.reserve(static_cast<std::size_t>(n));
  Scalar previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar pivot = a(k, k);
    minors.push_back(pivot);
    if (pivot == 0) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = pivot;
  }
  return minors;
}

namespace detail {

// In-place Bareiss forward elimination with row pivoting on the first
// `pivot_cols` columns. Returns the determinant sign flips (+1/-1) and the
// final pivot, or a zero pivot when the leading block is singular.
template <typename Scalar>
std::pair<int, Scalar> bareiss_forward(Matrix<Scalar>& a, Eigen::Index pivot_cols) {
  const Eigen::Index n = a.rows();
  int sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k < pivot_cols; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return {sign, Scalar(0)};
    if (p != k) {
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    const Scalar pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < a.cols(); ++j)
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = pivot;
  }
  return {sign, previous};
}

}  // namespace detail

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  auto [sign, last] = detail::bareiss_forward(a, a.cols());
  return sign > 0 ? last : Scalar(-last);
}

/// Exact solution of m * x = b over the rationals.
///
/// Fraction-free elimination on the augmented integer matrix, then rational
/// back substitution. Throws PreconditionError when m is singular.
template <typename DerivedM, typename DerivedB>
RationalVector solve_exact(const Eigen::MatrixBase<DerivedM>& m,
                           const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || b.size() != n)
    throw PreconditionError("solve_exact: dimension mismatch");
  IntegerMatrix a(n, n + 1);
  a.leftCols(n) = m.template cast<Integer>();
  a.col(n) = b.template cast<Integer>();
  const Integer last = detail::bareiss_forward(a, n).second;
  if (last == 0 && n > 0) throw PreconditionError("solve_exact: singular matrix");

  RationalVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc(a(i, n));
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rational(a(i, j)) * x(j);
    x(i) = acc / Rational(a(i, i));
  }
  return x;
}

}  // namespace resgraph

#endif  // RESGRAPH_EXACT_HPP
