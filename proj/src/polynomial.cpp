#include "sforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sforge {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string monomial_to_string(const Exponents& e, std::span<const std::string> variables) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Integer weighted_degree(const Exponents& e, std::span<const Integer> weights) {
  Integer w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
  return w;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Exponents e(variables.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(variables), std::move(e));
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exponents,
                                const Rational& coefficient) {
  if (exponents.size() != variables.size()) {
    throw DimensionError("monomial: exponent vector does not match the variable count");
  }
  Polynomial p(std::move(variables));
  p.add_term(exponents, coefficient);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw DimensionError("polynomials live over different variable lists");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.variables_);
  Exponents e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != variables_.size()) {
    throw DimensionError("substitute: need one image per variable");
  }
  if (images.empty()) return *this;
  const auto& target = images.front().variables();
  for (const auto& img : images) {
    if (img.variables() != target) throw DimensionError("substitute: images over different rings");
  }
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::optional<Integer> Polynomial::weighted_degree(std::span<const Integer> weights) const {
  if (weights.size() != variables_.size()) {
    throw DimensionError("weighted_degree: need one weight per variable");
  }
  std::optional<Integer> common;
  for (const auto& [e, c] : terms_) {
    const Integer w = sforge::weighted_degree(e, weights);
    if (common && *common != w) return std::nullopt;
    common = w;
  }
  return common;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_monomial = total_degree(e) == 0;
    if (unit_monomial) {
      out += sforge::to_string(mag);
    } else {
      if (mag != 1) out += sforge::to_string(mag) + '*';
      out += monomial_to_string(e, variables_);
    }
  }
  return out;
}

// Recursive-descent parser ---------------------------------------------------

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::vector<std::string> variables)
      : text_(text), variables_(std::move(variables)) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial p(variables_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    p += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) base = base.pow(unsigned_literal());
    return base;
  }

  unsigned unsigned_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      const std::string literal(text_.substr(start, pos_ - start));
      if (literal.back() == '/' || std::count(literal.begin(), literal.end(), '/') > 1) {
        fail("bad number '" + literal + "'");
      }
      if (const auto slash = literal.find('/');
          slash != std::string::npos && literal.find_first_not_of('0', slash + 1) == std::string::npos) {
        fail("zero denominator in '" + literal + "'");
      }
      Rational q(literal);
      return Polynomial::constant(variables_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) fail("unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(variables_, static_cast<std::size_t>(it - variables_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::vector<std::string> variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables) {
  return PolynomialParser(text, std::move(variables)).parse();
}

}  // namespace sforge
