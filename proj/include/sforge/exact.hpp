#pragma once

// Exact integer and rational linear algebra on Eigen dense types.
//
// Every routine is a free function templated on the Eigen expression, so it
// runs on any scalar with exact ring arithmetic: the GMP-backed `Integer` /
// `Rational` used throughout the library, or plain `std::int64_t` in tests.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sforge/error.hpp"

namespace sforge {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

// Scalar helpers -------------------------------------------------------------

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);
/// q - floor(q), always in [0, 1).
Rational fractional_part(const Rational& q);
bool is_integral(const Rational& q);
Integer lcm_of_denominators(const RatVector& v);
std::int64_t to_int64(const Integer& x);
std::string to_string(const Integer& x);
/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace detail

// Determinant ----------------------------------------------------------------

/// Fraction-free (Bareiss) elimination; every division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "determinant");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> a = m;
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == Scalar(0)) ++r;
      if (r == n) return Scalar(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Smith normal form ----------------------------------------------------------

/// U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... ,
/// entries nonnegative and zeros last.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;

  /// Diagonal of D, length min(rows, cols).
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Eigen::Index r = std::min(D.rows(), D.cols());
    for (Eigen::Index i = 0; i < r; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Elementary row/column reduction. The pivot is the entry of smallest
/// nonzero absolute value in the remaining block, ties to the lowest
/// (row, col) in row-major order.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  SmithForm<Scalar> out;
  out.D = m;
  out.U = Matrix<Scalar>::Identity(rows, rows);
  out.V = Matrix<Scalar>::Identity(cols, cols);
  auto& D = out.D;
  auto& U = out.U;
  auto& V = out.V;

  const Eigen::Index rank_bound = std::min(rows, cols);
  for (Eigen::Index t = 0; t < rank_bound; ++t) {
    for (;;) {
      Eigen::Index pi = -1;
      Eigen::Index pj = -1;
      Scalar best(0);
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (D(i, j) == Scalar(0)) continue;
          const Scalar a = abs_value(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return out;  // remaining block is zero

      if (pi != t) {
        D.row(t).swap(D.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool cleared = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == Scalar(0)) continue;
        const Scalar q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        if (D(i, t) != Scalar(0)) cleared = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == Scalar(0)) continue;
        const Scalar q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        if (D(t, j) != Scalar(0)) cleared = false;
      }
      if (!cleared) continue;

      // Row t and column t are clear; enforce divisibility on the rest.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (D(i, j) % D(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      U.row(t) += U.row(bad);
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) *= Scalar(-1);
      U.row(t) *= Scalar(-1);
    }
  }
  return out;
}

// Rational inverse and solve -------------------------------------------------

namespace detail {

/// Gauss-Jordan on [A | B] over the rationals; returns X with A X = B.
inline RatMatrix gauss_jordan_solve(RatMatrix a, RatMatrix b, const char* op) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError(std::string(op) + ": matrix is singular");
    if (p != k) {
      a.row(k).swap(a.row(p));
      b.row(k).swap(b.row(p));
    }
    const Rational inv = Rational(1) / a(k, k);
    a.row(k) *= inv;
    b.row(k) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      a.row(i) -= f * a.row(k);
      b.row(i) -= f * b.row(k);
    }
  }
  return b;
}

}  // namespace detail

template <typename Derived>
RatMatrix invert_rational(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "invert_rational");
  const Eigen::Index n = m.rows();
  return detail::gauss_jordan_solve(m.template cast<Rational>(), RatMatrix::Identity(n, n),
                                    "invert_rational");
}

template <typename DerivedM, typename DerivedB>
RatVector solve_rational(const Eigen::MatrixBase<DerivedM>& m,
                         const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_square(m, "solve_rational");
  if (b.size() != m.rows()) {
    throw DimensionError("solve_rational: right-hand side has wrong length");
  }
  RatMatrix rhs(b.size(), 1);
  for (Eigen::Index i = 0; i < b.size(); ++i) rhs(i, 0) = Rational(b(i));
  const RatMatrix x = detail::gauss_jordan_solve(m.template cast<Rational>(), rhs, "solve_rational");
  return x.col(0);
}

/// Some solution of a x = b for a rectangular system, free variables set to
/// zero; nullopt if the system is inconsistent.
std::optional<RatVector> solve_particular(RatMatrix a, RatVector b);

// Definiteness ---------------------------------------------------------------

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

/// Sylvester's criterion: (-1)^k times the k-th leading principal minor is positive.
template <typename Derived>
bool is_negative_definite(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (!is_symmetric(m)) throw DimensionError("is_negative_definite: matrix is not symmetric");
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    Scalar minor = determinant(m.topLeftCorner(k, k));
    if (k % 2 == 1) minor = -minor;
    if (!(minor > Scalar(0))) return false;
  }
  return true;
}

/// a^T M b; the bilinear form of an intersection matrix.
template <typename DerivedA, typename DerivedM, typename DerivedB>
auto pairing(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedM>& m,
             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Scalar sum(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (a(i) == Scalar(0)) continue;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      sum += a(i) * Scalar(m(i, j)) * b(j);
    }
  }
  return sum;
}

}  // namespace sforge
