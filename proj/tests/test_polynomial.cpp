#include <gtest/gtest.h>

#include <random>

#include "sforge/polynomial.hpp"

using namespace sforge;

namespace {

const std::vector<std::string> kXyz = {"x", "y", "z"};

Polynomial p(const std::string& text, const std::vector<std::string>& vars = kXyz) {
  return parse_polynomial(text, vars);
}

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> coef(-4, 4);
  Polynomial out(vars);
  for (int t = 0; t < 4; ++t) {
    Exponents e(vars.size());
    for (auto& x : e) x = static_cast<unsigned>(exp(rng));
    out.add_term(e, Rational(coef(rng), 1 + exp(rng)));
  }
  return out;
}

}  // namespace

TEST(Polynomial, DifferenceOfSquares) {
  EXPECT_EQ(p("(x + y) * (x - y)"), p("x^2 - y^2"));
  EXPECT_EQ((p("x + y") * p("x - y")).to_string(), "x^2 - y^2");
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  const Polynomial q = p("x + y") - p("x");
  EXPECT_EQ(q.term_count(), 1u);
  EXPECT_TRUE((q - p("y")).is_zero());
  EXPECT_EQ(Polynomial(kXyz).to_string(), "0");
  EXPECT_EQ(Polynomial(kXyz).degree(), -1);
}

TEST(Polynomial, RenderingOrderAndCoefficients) {
  EXPECT_EQ(p("z^4 - 1/2*y^3 + x^2").to_string(), "x^2 - 1/2*y^3 + z^4");
  EXPECT_EQ(p("-x + 3").to_string(), "-x + 3");
  EXPECT_EQ(p("2*x*y^2*z").to_string(), "2*x*y^2*z");
}

TEST(Polynomial, SubstituteE7InvariantsIntoRelation) {
  const std::vector<std::string> gens = {"A", "B", "C", "D"};
  const std::vector<Polynomial> images = {p("x^2"), p("x*z"), p("z^2"), p("y")};
  EXPECT_TRUE(p("A*C - B^2", gens).substitute(images).is_zero());
  EXPECT_EQ(p("B^2 + C*(C^2 + D^3)", gens).substitute(images), p("x^2*z^2 + z^6 + y^3*z^2"));
}

TEST(Polynomial, WeightedDegree) {
  const std::vector<std::string> z = {"z1", "z2", "z3", "z4"};
  const std::vector<Integer> weights = {21, 14, 12, 30};
  EXPECT_EQ(p("z1^2 + z2^3 + z3*z4", z).weighted_degree(weights), Integer(42));
  EXPECT_FALSE(p("z1^2 + z2^2", z).weighted_degree(weights).has_value());
  EXPECT_FALSE(Polynomial(z).weighted_degree(weights).has_value());
  EXPECT_EQ(weighted_degree(Exponents{1, 4, 0, 0}, weights), 77);
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, kXyz);
    const auto b = random_poly(rng, kXyz);
    const auto c = random_poly(rng, kXyz);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(2), a * a);
    EXPECT_EQ(p(a.to_string()), a);
  }
}

TEST(Polynomial, MismatchedRingsThrow) {
  EXPECT_THROW(p("x") + p("u", {"u"}), DimensionError);
  EXPECT_THROW(p("x").substitute(std::vector<Polynomial>{p("x")}), DimensionError);
}

TEST(ParsePolynomial, Errors) {
  EXPECT_THROW(p("x +"), InputError);
  EXPECT_THROW(p("w"), InputError);
  EXPECT_THROW(p("(x"), InputError);
  EXPECT_THROW(p("x y"), InputError);
  EXPECT_THROW(p("1/0"), InputError);
}

TEST(Monomials, Helpers) {
  EXPECT_EQ(total_degree({2, 0, 3}), 5u);
  EXPECT_TRUE(divides({1, 0, 1}, {2, 0, 3}));
  EXPECT_FALSE(divides({0, 1, 0}, {2, 0, 3}));
  EXPECT_EQ(monomial_to_string({2, 1, 0}, kXyz), "x^2*y");
  EXPECT_EQ(monomial_to_string({0, 0, 0}, kXyz), "1");
}
