#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sforge/exact.hpp"

namespace sforge {

/// Exponent vector of a monomial, one entry per variable.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);
/// True if every entry of `a` is <= the matching entry of `b`.
bool divides(const Exponents& a, const Exponents& b);
/// "x^2*y" style rendering; "1" for the empty monomial.
std::string monomial_to_string(const Exponents& e, std::span<const std::string> variables);

/// Sparse polynomial with exact rational coefficients over a named, ordered
/// variable list. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial monomial(std::vector<std::string> variables, Exponents exponents,
                             const Rational& coefficient = Rational(1));

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned n) const;

  /// Replaces variable i by images[i]; the result lives in the images' ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Common weight of every monomial under `weights`, or nullopt if the
  /// polynomial is not weighted-homogeneous (or is zero).
  std::optional<Integer> weighted_degree(std::span<const Integer> weights) const;

  /// Terms in decreasing lexicographic order, e.g. "x^2 + y^3 - 1/2*z^4".
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

Integer weighted_degree(const Exponents& e, std::span<const Integer> weights);

/// Parses sums of products of rational numbers, variables, powers ("^") and
/// parenthesized subexpressions, e.g. "B^2 + C*(C^2 + D^3)". Juxtaposition
/// is not multiplication; use '*'.
Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables);

}  // namespace sforge
