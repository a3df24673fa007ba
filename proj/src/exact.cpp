#include "sforge/exact.hpp"

#include <limits>

namespace sforge {

Integer numerator(const Rational& q) { return mp::numerator(q); }

Integer denominator(const Rational& q) { return mp::denominator(q); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Rational fractional_part(const Rational& q) {
  const Integer fl = floor_div(numerator(q), denominator(q));
  return q - Rational(fl);
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = mp::lcm(l, denominator(v(i)));
  return l;
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw PreconditionError("integer " + x.str() + " exceeds the 64-bit range");
  }
  return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}


std::optional<RatVector> solve_particular(RatMatrix a, RatVector b) {
  if (b.size() != a.rows()) throw DimensionError("solve_particular: right-hand side has wrong length");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(r).swap(a.row(p));
      std::swap(b(r), b(p));
    }
    const Rational inv = Rational(1) / a(r, c);
    a.row(r) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i) {
    if (b(i) != 0) return std::nullopt;
  }
  RatVector x = RatVector::Zero(cols);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x(pivot_cols[k]) = b(static_cast<Eigen::Index>(k));
  return x;
}

}  // namespace sforge
