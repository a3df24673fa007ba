#include "sforge/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sforge {

std::string generator_name(std::size_t index) {
  std::string name;
  ++index;
  while (index > 0) {
    --index;
    name.insert(name.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return name;
}

std::vector<Polynomial> InvariantBasis::images() const {
  std::vector<Polynomial> out;
  for (const auto& g : generators) out.push_back(Polynomial::monomial(variables, g));
  return out;
}

namespace {

/// Characters as integer residues: leaf w shifts coordinate j by residue[w][j] mod orders[j].
struct ResidueTable {
  std::vector<std::int64_t> orders;
  std::vector<std::vector<std::int64_t>> residue;
  std::vector<std::int64_t> leaf_order;  ///< order of each leaf's character
};

ResidueTable residues(const CharacterAssignment& chars) {
  ResidueTable table;
  for (const auto& o : chars.orders) table.orders.push_back(to_int64(o));
  for (const auto& phase : chars.phases) {
    std::vector<std::int64_t> row;
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < phase.size(); ++j) {
      const Rational scaled = phase[j] * chars.orders[j];
      if (!is_integral(scaled)) {
        throw PreconditionError("phase denominator does not divide the generator order");
      }
      const std::int64_t r = to_int64(numerator(scaled)) % table.orders[j];
      row.push_back(r);
      ord = std::lcm(ord, table.orders[j] / std::gcd(r, table.orders[j]));
    }
    table.residue.push_back(std::move(row));
    table.leaf_order.push_back(ord);
  }
  return table;
}

/// Minimal invariant monomials are the minimal zero-sum sequences over the
/// leaf characters. A depth-first walk over multisets in nondecreasing leaf
/// order keeps the set of subsums of the current (zero-sum-free) sequence;
/// adding a leaf either closes a minimal zero-sum sequence, creates a proper
/// zero-sum subsequence (dead end), or stays zero-sum-free.
class InvariantSearch {
 public:
  InvariantSearch(const ResidueTable& table, unsigned degree_cap)
      : table_(table), cap_(degree_cap), current_(table.residue.size(), 0) {
    size_ = 1;
    for (std::int64_t o : table_.orders) size_ *= static_cast<std::size_t>(o);
    for (const auto& row : table_.residue) leaf_element_.push_back(encode(row));
    add_.assign(size_ * leaf_element_.size(), 0);
    for (std::size_t x = 0; x < size_; ++x) {
      const auto digits = decode(x);
      for (std::size_t w = 0; w < leaf_element_.size(); ++w) {
        std::vector<std::int64_t> sum(digits.size());
        for (std::size_t j = 0; j < digits.size(); ++j) {
          sum[j] = (digits[j] + table_.residue[w][j]) % table_.orders[j];
        }
        add_[x * leaf_element_.size() + w] = encode(sum);
      }
    }
  }

  std::vector<Exponents> run() {
    descend(0, 0, 0, std::vector<char>(size_, 0));
    return std::move(found_);
  }

 private:
  std::size_t encode(const std::vector<std::int64_t>& digits) const {
    std::size_t x = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
      const std::int64_t o = table_.orders[j];
      x = x * static_cast<std::size_t>(o) + static_cast<std::size_t>(((digits[j] % o) + o) % o);
    }
    return x;
  }

  std::vector<std::int64_t> decode(std::size_t x) const {
    std::vector<std::int64_t> digits(table_.orders.size());
    for (std::size_t j = digits.size(); j-- > 0;) {
      const auto o = static_cast<std::size_t>(table_.orders[j]);
      digits[j] = static_cast<std::int64_t>(x % o);
      x /= o;
    }
    return digits;
  }

  std::size_t plus(std::size_t x, std::size_t w) const { return add_[x * leaf_element_.size() + w]; }

  // subsums[x] != 0 iff some nonempty subsequence of the current sequence sums to x
  void descend(std::size_t first, unsigned degree, std::size_t total, const std::vector<char>& subsums) {
    if (degree >= cap_) return;
    for (std::size_t w = first; w < current_.size(); ++w) {
      ++current_[w];
      const std::size_t next_total = plus(total, w);
      if (next_total == 0) {
        found_.push_back(current_);
      } else {
        std::vector<char> next = subsums;
        bool zero_sum = false;
        next[leaf_element_[w]] = 1;
        for (std::size_t x = 0; x < size_; ++x) {
          if (subsums[x]) next[plus(x, w)] = 1;
        }
        zero_sum = next[0] != 0;
        if (!zero_sum) descend(w, degree + 1, next_total, next);
      }
      --current_[w];
    }
  }

  const ResidueTable& table_;
  unsigned cap_;
  Exponents current_;
  std::size_t size_ = 1;
  std::vector<std::size_t> leaf_element_;
  std::vector<std::size_t> add_;
  std::vector<Exponents> found_;
};

}  // namespace

InvariantBasis invariant_generators(const CharacterAssignment& chars, const Integer& order) {
  if (order > kMaxEnumeratedGroupOrder) {
    throw PreconditionError("group of order " + order.str() + " exceeds the invariant enumeration cap " +
                            std::to_string(kMaxEnumeratedGroupOrder));
  }
  if (order < 1) throw PreconditionError("group order must be positive");
  const ResidueTable table = residues(chars);
  std::vector<Exponents> candidates = InvariantSearch(table, order.convert_to<unsigned>()).run();

  std::stable_sort(candidates.begin(), candidates.end(), [](const Exponents& a, const Exponents& b) {
    return total_degree(a) < total_degree(b);
  });
  std::vector<Exponents> minimal;
  for (const auto& c : candidates) {
    const bool reducible = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Exponents& m) { return divides(m, c); });
    if (!reducible) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Exponents& a, const Exponents& b) {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  });

  InvariantBasis basis;
  basis.variables = chars.variables;
  basis.generators = std::move(minimal);
  for (std::size_t i = 0; i < basis.generators.size(); ++i) basis.names.push_back(generator_name(i));
  return basis;
}

std::vector<Polynomial> toric_relations(const InvariantBasis& basis, unsigned degree_bound) {
  const std::size_t k = basis.generators.size();
  const std::size_t t = basis.variables.size();
  using Product = std::vector<std::size_t>;  // generator indices, nondecreasing
  std::map<Exponents, std::vector<Product>> by_image;

  Product product;
  Exponents image(t, 0);
  auto visit = [&](auto&& self, std::size_t first) -> void {
    if (!product.empty()) by_image[image].push_back(product);
    if (product.size() == degree_bound) return;
    for (std::size_t i = first; i < k; ++i) {
      product.push_back(i);
      for (std::size_t w = 0; w < t; ++w) image[w] += basis.generators[i][w];
      self(self, i);
      for (std::size_t w = 0; w < t; ++w) image[w] -= basis.generators[i][w];
      product.pop_back();
    }
  };
  visit(visit, 0);

  auto exponents = [&](const Product& p) {
    Exponents e(k, 0);
    for (std::size_t i : p) ++e[i];
    return e;
  };
  auto disjoint = [](const Product& a, const Product& b) {
    return std::none_of(a.begin(), a.end(), [&](std::size_t i) { return std::binary_search(b.begin(), b.end(), i); });
  };

  struct Pair {
    unsigned degree;
    Exponents lead;
    Exponents trail;
  };
  std::vector<Pair> pairs;
  for (const auto& [img, group] : by_image) {
    for (std::size_t p = 0; p < group.size(); ++p) {
      for (std::size_t q = p + 1; q < group.size(); ++q) {
        if (!disjoint(group[p], group[q])) continue;
        if (pairs.size() == kMaxToricRelations) {
          throw PreconditionError("more than " + std::to_string(kMaxToricRelations) +
                                  " toric relations up to degree " + std::to_string(degree_bound));
        }
        Exponents a = exponents(group[p]);
        Exponents b = exponents(group[q]);
        if (a < b) std::swap(a, b);
        pairs.push_back({static_cast<unsigned>(group[p].size() + group[q].size()), std::move(a), std::move(b)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return std::tie(x.lead, x.trail) > std::tie(y.lead, y.trail);
  });

  std::vector<Polynomial> relations;
  for (const auto& pair : pairs) {
    relations.push_back(Polynomial::monomial(basis.names, pair.lead) -
                        Polynomial::monomial(basis.names, pair.trail));
  }
  return relations;
}

namespace {

void monomials_up_to(std::size_t vars, unsigned bound, Exponents& cur, std::size_t i, unsigned degree,
                     std::vector<Exponents>& out) {
  if (i == vars) {
    out.push_back(cur);
    return;
  }
  for (unsigned a = 0; degree + a <= bound; ++a) {
    cur[i] = a;
    monomials_up_to(vars, bound, cur, i + 1, degree + a, out);
  }
  cur[i] = 0;
}

}  // namespace

std::optional<MembershipCertificate> membership_bounded(const Polynomial& target,
                                                        std::span<const Polynomial> ideal_generators,
                                                        unsigned bound) {
  const auto& vars = target.variables();
  for (const auto& g : ideal_generators) {
    if (g.variables() != vars) throw DimensionError("membership_bounded: polynomials over different rings");
  }
  std::vector<Exponents> multipliers;
  Exponents scratch(vars.size(), 0);
  monomials_up_to(vars.size(), bound, scratch, 0, 0, multipliers);

  // Row per monomial that can occur, column per unknown cofactor coefficient.
  std::map<Exponents, Eigen::Index> row_of;
  auto row_for = [&](const Exponents& e) {
    const auto [it, inserted] = row_of.try_emplace(e, static_cast<Eigen::Index>(row_of.size()));
    return it->second;
  };
  for (const auto& [e, c] : target.terms()) row_for(e);

  struct Entry {
    Eigen::Index row;
    Eigen::Index col;
    Rational value;
  };
  std::vector<Entry> entries;
  Eigen::Index col = 0;
  Exponents product(vars.size());
  for (const auto& g : ideal_generators) {
    for (const auto& mu : multipliers) {
      for (const auto& [e, c] : g.terms()) {
        for (std::size_t i = 0; i < product.size(); ++i) product[i] = e[i] + mu[i];
        entries.push_back({row_for(product), col, c});
      }
      ++col;
    }
  }

  RatMatrix a = RatMatrix::Zero(static_cast<Eigen::Index>(row_of.size()), col);
  for (const auto& entry : entries) a(entry.row, entry.col) += entry.value;
  RatVector b = RatVector::Zero(a.rows());
  for (const auto& [e, c] : target.terms()) b(row_of.at(e)) = c;

  const auto solution = solve_particular(std::move(a), std::move(b));
  if (!solution) return std::nullopt;

  MembershipCertificate cert;
  cert.degree_bound = bound;
  Eigen::Index k = 0;
  for (std::size_t gi = 0; gi < ideal_generators.size(); ++gi) {
    Polynomial q(vars);
    for (const auto& mu : multipliers) q.add_term(mu, (*solution)(k++));
    cert.cofactors.push_back(std::move(q));
  }
  if (!verify_certificate(target, ideal_generators, cert)) {
    throw std::logic_error("membership_bounded: certificate failed verification");
  }
  return cert;
}

bool verify_certificate(const Polynomial& target, std::span<const Polynomial> ideal_generators,
                        const MembershipCertificate& certificate) {
  if (certificate.cofactors.size() != ideal_generators.size()) return false;
  Polynomial sum(target.variables());
  for (std::size_t i = 0; i < ideal_generators.size(); ++i) {
    sum += certificate.cofactors[i] * ideal_generators[i];
  }
  return sum == target;
}

}  // namespace sforge
