#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sforge/equations.hpp"
#include "sforge/invariants.hpp"
#include "support.hpp"

using namespace sforge;
using testing_support::corpus_graph;

namespace {

CharacterAssignment cyclic_action(std::int64_t order, const std::vector<std::int64_t>& residues) {
  CharacterAssignment chars;
  chars.orders = {Integer(order)};
  for (std::size_t w = 0; w < residues.size(); ++w) {
    chars.variables.push_back(std::string(1, static_cast<char>('x' + w)));
    chars.phases.push_back({Rational(Integer(residues[w]), Integer(order))});
  }
  return chars;
}

std::vector<std::string> rendered(const InvariantBasis& b) {
  std::vector<std::string> out;
  for (const auto& g : b.generators) out.push_back(monomial_to_string(g, b.variables));
  return out;
}

std::set<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(GeneratorName, Sequence) {
  EXPECT_EQ(generator_name(0), "A");
  EXPECT_EQ(generator_name(25), "Z");
  EXPECT_EQ(generator_name(26), "AA");
  EXPECT_EQ(generator_name(27), "AB");
}

TEST(InvariantGenerators, E7) {
  const auto g = corpus_graph("e7");
  const auto basis = invariant_generators(leaf_characters(g), discriminant_group(g).order);
  EXPECT_EQ(basis.names, (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(rendered(basis), (std::vector<std::string>{"x^2", "x*z", "z^2", "y"}));
}

TEST(InvariantGenerators, TrivialGroupGivesVariables) {
  const auto g = corpus_graph("e8");
  const auto basis = invariant_generators(leaf_characters(g), 1);
  const auto names = rendered(basis);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), (std::set<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(toric_relations(basis, 3).empty());
}

TEST(InvariantGenerators, CyclicThree) {
  const auto basis = invariant_generators(cyclic_action(3, {1, 1}), 3);
  EXPECT_EQ(rendered(basis), (std::vector<std::string>{"x^3", "x^2*y", "x*y^2", "y^3"}));
  const auto rel = toric_relations(basis, 2);
  EXPECT_EQ(as_strings(rel), (std::set<std::string>{"A*C - B^2", "B*D - C^2", "A*D - B*C"}));
}

TEST(InvariantGenerators, RefusesAboveCap) {
  EXPECT_THROW(invariant_generators(cyclic_action(2001, {1, 2000}), 2001), PreconditionError);
}

TEST(ToricRelations, E7AndBounds) {
  const auto g = corpus_graph("e7");
  const auto basis = invariant_generators(leaf_characters(g), 2);
  EXPECT_EQ(as_strings(toric_relations(basis, 2)), (std::set<std::string>{"A*C - B^2"}));
  EXPECT_TRUE(toric_relations(basis, 1).empty());
}

TEST(ToricRelations, MatchBruteForceAndVanish) {
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree()) continue;
    const auto data = discriminant_group(g);
    if (data.order > 200) continue;
    const auto basis = invariant_generators(leaf_characters(g, data), data.order);
    if (basis.generators.size() > 100) {
      EXPECT_THROW(toric_relations(basis, 2), PreconditionError) << path;
      continue;
    }
    const auto rel = toric_relations(basis, 2);
    std::set<std::pair<Exponents, Exponents>> got;
    for (const auto& r : rel) {
      ASSERT_EQ(r.term_count(), 2u);
      got.emplace(r.terms().rbegin()->first, r.terms().begin()->first);
      EXPECT_TRUE(r.substitute(basis.images()).is_zero()) << path;
    }
    EXPECT_EQ(got, oracle::degree_two_binomials(basis.generators)) << path;
  }
}

TEST(InvariantGenerators, InvariantAndMinimalOnCorpus) {
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree()) continue;
    const auto data = discriminant_group(g);
    if (data.order > kMaxEnumeratedGroupOrder) continue;
    const auto chars = leaf_characters(g, data);
    const auto basis = invariant_generators(chars, data.order);
    for (const auto& gen : basis.generators) {
      EXPECT_EQ(chars.character_of(gen), chars.trivial_character()) << path;
      for (const auto& other : basis.generators) {
        if (other != gen) EXPECT_FALSE(divides(other, gen)) << path;
      }
    }
  }
}

TEST(InvariantGenerators, MatchIndecomposableInvariantsOnCorpus) {
  int checked = 0;
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree()) continue;
    const auto data = discriminant_group(g);
    if (data.order > 200) continue;
    const auto chars = leaf_characters(g, data);
    oracle::DiagonalAction action;
    for (const auto& o : chars.orders) action.orders.push_back(to_int64(o));
    for (const auto& phase : chars.phases) {
      std::vector<oracle::i64> r;
      for (std::size_t j = 0; j < phase.size(); ++j) r.push_back(to_int64(numerator(phase[j] * chars.orders[j])));
      action.residue.push_back(r);
    }
    const auto basis = invariant_generators(chars, data.order);
    const std::set<Exponents> got(basis.generators.begin(), basis.generators.end());
    EXPECT_EQ(got, oracle::atomic_invariants(action, static_cast<unsigned>(to_int64(data.order)))) << path;
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(InvariantGenerators, CompleteOnSmallActions) {
  oracle::DiagonalAction action{{6}, {{1}, {2}, {3}}};
  const auto basis = invariant_generators(cyclic_action(6, {1, 2, 3}), 6);
  EXPECT_GT(oracle::check_invariant_factorization(action, basis.generators, 6), 0);
  oracle::DiagonalAction wrong{{6}, {{1}, {2}, {3}}};
  auto missing = basis.generators;
  missing.pop_back();
  EXPECT_EQ(oracle::check_invariant_factorization(wrong, missing, 6), -1);
}

TEST(Membership, E7Identity) {
  const auto g = corpus_graph("e7");
  const auto basis = invariant_generators(leaf_characters(g), 2);
  const auto target = parse_polynomial("B^2 + C*(C^2 + D^3)", basis.names).substitute(basis.images());
  const auto pkg = build_splice_equations(g);
  const auto ideal = pkg.equations();
  const auto cert = membership_bounded(target, ideal, 2);
  ASSERT_TRUE(cert.has_value());
  ASSERT_EQ(cert->cofactors.size(), 1u);
  EXPECT_EQ(cert->cofactors[0].to_string(), "z^2");
  EXPECT_TRUE(verify_certificate(target, ideal, *cert));
}

TEST(Membership, GeneratorItselfAndUnreachable) {
  const std::vector<std::string> v = {"x", "y", "z"};
  const std::vector<Polynomial> ideal = {parse_polynomial("x^2 + y^3 + z^4", v)};
  const auto self = membership_bounded(ideal[0], ideal, 0);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->cofactors[0].to_string(), "1");
  for (unsigned bound = 0; bound <= 5; ++bound) {
    EXPECT_FALSE(membership_bounded(parse_polynomial("x", v), ideal, bound).has_value()) << bound;
  }
}

TEST(Membership, TamperedCertificateFailsVerification) {
  const std::vector<std::string> v = {"x", "y", "z"};
  const std::vector<Polynomial> ideal = {parse_polynomial("x^2 + y^3 + z^4", v)};
  MembershipCertificate cert;
  cert.cofactors = {parse_polynomial("z", v)};
  EXPECT_FALSE(verify_certificate(parse_polynomial("x^2*z^2 + y^3*z^2 + z^6", v), ideal, cert));
  cert.cofactors = {};
  EXPECT_FALSE(verify_certificate(parse_polynomial("0", v), ideal, cert));
}

TEST(Membership, TwoGeneratorIdeal) {
  const std::vector<std::string> v = {"z1", "z2", "z3", "z4"};
  const std::vector<Polynomial> ideal = {parse_polynomial("z1^2 + z2^3 + z3*z4", v),
                                         parse_polynomial("z1*z2^4 + z3^5 + z4^2", v)};
  const auto target = parse_polynomial("z3", v) * ideal[0] - parse_polynomial("2*z1", v) * ideal[1];
  const auto cert = membership_bounded(target, ideal, 1);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(target, ideal, *cert));
}
