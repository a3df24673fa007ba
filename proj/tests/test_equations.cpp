#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sforge/equations.hpp"
#include "support.hpp"

using namespace sforge;
using testing_support::corpus_graph;

namespace {

std::set<std::string> support(const Polynomial& q) {
  std::set<std::string> out;
  for (const auto& [e, c] : q.terms()) out.insert(monomial_to_string(e, q.variables()));
  return out;
}

std::size_t edge_toward(const SpliceDiagram& d, std::size_t node, const std::string& toward) {
  for (std::size_t e : d.edges_at(node)) {
    if (d.vertex(d.other_end(e, node)).name == toward) return e;
  }
  throw std::runtime_error("no edge toward " + toward);
}

/// Every maximal minor by explicit column-subset enumeration and the oracle determinant.
bool minors_nonzero_oracle(const IntMatrix& m) {
  const auto mat = testing_support::to_mat(m);
  const std::size_t rows = mat.size();
  const std::size_t cols = rows == 0 ? 0 : mat[0].size();
  std::vector<bool> pick(cols, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(rows), true);
  std::vector<std::size_t> all_rows(rows);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pick[j]) chosen.push_back(j);
    }
    if (oracle::det(oracle::submatrix(mat, all_rows, chosen)) == 0) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

}  // namespace

TEST(AdmissibleMonomials, TwoNodeDirections) {
  const auto g = corpus_graph("two-node");
  const auto d = to_splice_diagram(g);
  const auto sg = semigroup_condition(d);
  const std::size_t left = *d.find_vertex("left");
  const std::size_t right = *d.find_vertex("right");
  const auto names = d.leaf_names();
  const auto toward_z1 = admissible_monomials(sg, left, edge_toward(d, left, "z1"));
  ASSERT_EQ(toward_z1.size(), 1u);
  EXPECT_EQ(monomial_to_string(toward_z1[0], names), "z1^2");
  const auto toward_left = admissible_monomials(sg, right, edge_toward(d, right, "left"));
  std::set<std::string> got;
  for (const auto& m : toward_left) got.insert(monomial_to_string(m, names));
  EXPECT_EQ(got, (std::set<std::string>{"z1*z2^4", "z1^3*z2"}));
}

TEST(AdmissibleMonomials, UnattainedCharacterGivesNothing) {
  const auto g = corpus_graph("e7");
  const auto d = to_splice_diagram(g);
  const auto sg = semigroup_condition(d);
  const auto chars = leaf_characters(g);
  const std::size_t c = d.nodes()[0];
  const std::size_t toward_x = edge_toward(d, c, "x");
  EXPECT_EQ(admissible_monomials(sg, c, toward_x, chars, chars.trivial_character()).size(), 1u);
  EXPECT_TRUE(admissible_monomials(sg, c, toward_x, chars, Character{Rational(1, 2)}).empty());
}

TEST(Congruence, Examples) {
  const auto e7 = congruence_condition(corpus_graph("e7"));
  EXPECT_TRUE(e7.holds);
  ASSERT_EQ(e7.nodes.size(), 1u);
  EXPECT_EQ(e7.nodes[0].character, Character{Rational(0)});
  EXPECT_TRUE(congruence_condition(corpus_graph("two-node")).holds);
  EXPECT_TRUE(congruence_condition(corpus_graph("quotient-cusp-2-3")).holds);
  EXPECT_THROW(congruence_condition(corpus_graph("semigroup-fail")), SemigroupFailureError);
}

TEST(Congruence, ZhsGraphsFollowFromSemigroup) {
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree() || !is_zhs(g)) continue;
    const auto d = to_splice_diagram(g);
    if (!d.has_nodes()) continue;
    const auto sg = semigroup_condition(d);
    if (!sg.holds) continue;
    EXPECT_TRUE(congruence_condition(d, sg, leaf_characters(g)).holds) << path;
  }
}

TEST(Congruence, ChosenMonomialsShareTheCharacter) {
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree()) continue;
    const auto d = to_splice_diagram(g);
    if (!d.has_nodes()) continue;
    const auto sg = semigroup_condition(d);
    if (!sg.holds) continue;
    const auto chars = leaf_characters(g);
    const auto cc = congruence_condition(d, sg, chars);
    for (const auto& choice : cc.nodes) {
      if (!choice.character) {
        // no character is attained along every edge
        std::set<Character> common(choice.attained[0].begin(), choice.attained[0].end());
        for (std::size_t i = 1; i < choice.attained.size(); ++i) {
          std::set<Character> next;
          for (const auto& chi : choice.attained[i]) {
            if (common.count(chi)) next.insert(chi);
          }
          common = next;
        }
        EXPECT_TRUE(common.empty()) << path;
        continue;
      }
      ASSERT_EQ(choice.monomials.size(), choice.edges.size());
      for (std::size_t i = 0; i < choice.edges.size(); ++i) {
        EXPECT_EQ(chars.character_of(choice.monomials[i]), *choice.character) << path;
        const auto& list = sg.at(choice.node, choice.edges[i]).solutions;
        EXPECT_NE(std::find(list.begin(), list.end(), choice.monomials[i]), list.end()) << path;
      }
    }
  }
}

TEST(GenericCoefficients, SmallValencies) {
  IntMatrix three(1, 3);
  three << 1, 1, 1;
  EXPECT_EQ(generic_coefficients(3), three);
  IntMatrix four(2, 4);
  four << 1, 1, 1, 1, 1, 2, 3, 4;
  EXPECT_EQ(generic_coefficients(4), four);
  for (std::size_t v = 3; v <= 8; ++v) {
    const IntMatrix m = generic_coefficients(v);
    EXPECT_EQ(m.rows(), static_cast<Eigen::Index>(v - 2));
    EXPECT_EQ(m.cols(), static_cast<Eigen::Index>(v));
    EXPECT_TRUE(all_maximal_minors_nonzero(m));
    EXPECT_TRUE(minors_nonzero_oracle(m));
  }
  EXPECT_THROW(generic_coefficients(2), PreconditionError);
  IntMatrix degenerate(1, 3);
  degenerate << 1, 0, 1;
  EXPECT_FALSE(all_maximal_minors_nonzero(degenerate));
}

TEST(BuildSpliceEquations, E7) {
  const auto pkg = build_splice_equations(corpus_graph("e7"));
  EXPECT_EQ(pkg.variables, (std::vector<std::string>{"x", "y", "z"}));
  ASSERT_EQ(pkg.equations().size(), 1u);
  EXPECT_EQ(pkg.equations()[0].to_string(), "x^2 + y^3 + z^4");
  EXPECT_TRUE(check_equivariance(pkg));
}

TEST(BuildSpliceEquations, E8) {
  const auto pkg = build_splice_equations(corpus_graph("e8"));
  ASSERT_EQ(pkg.equations().size(), 1u);
  EXPECT_EQ(support(pkg.equations()[0]), (std::set<std::string>{"x^2", "y^3", "z^5"}));
}

TEST(BuildSpliceEquations, TwoNodeSystem) {
  const auto pkg = build_splice_equations(corpus_graph("two-node"));
  ASSERT_EQ(pkg.nodes.size(), 2u);
  EXPECT_EQ(pkg.nodes[0].name, "left");
  EXPECT_EQ(pkg.nodes[0].weight, 42);
  EXPECT_EQ(pkg.nodes[0].variable_weights, (std::vector<Integer>{21, 14, 12, 30}));
  EXPECT_EQ(support(pkg.nodes[0].equations.at(0)), (std::set<std::string>{"z1^2", "z2^3", "z3*z4"}));
  EXPECT_EQ(support(pkg.nodes[1].equations.at(0)), (std::set<std::string>{"z1*z2^4", "z3^5", "z4^2"}));
  // with every coefficient 1 this is the system written by hand
  const std::vector<std::string> z = {"z1", "z2", "z3", "z4"};
  EXPECT_EQ(pkg.nodes[0].equations[0], parse_polynomial("z1^2 + z2^3 + z3*z4", z));
  EXPECT_EQ(pkg.nodes[1].equations[0], parse_polynomial("z3^5 + z4^2 + z1*z2^4", z));
}

TEST(BuildSpliceEquations, Refusals) {
  EXPECT_THROW(build_splice_equations(corpus_graph("a3")), EquationsRefusal);
  try {
    build_splice_equations(corpus_graph("semigroup-fail"));
    ADD_FAILURE() << "expected a refusal";
  } catch (const EquationsRefusal& e) {
    EXPECT_EQ(e.node(), "r");
    EXPECT_EQ(e.edge(), "r->l");
  }
  EXPECT_THROW(build_splice_equations(corpus_graph("cusp-3-3-3")), NotQhsTreeError);
}

TEST(BuildSpliceEquations, InvariantsOnEveryPassingCorpusGraph) {
  int built = 0;
  for (const auto& path : testing_support::corpus_files()) {
    const auto g = parse_graph(testing_support::read_text(path));
    if (!g.is_qhs_tree()) continue;
    const auto d = to_splice_diagram(g);
    if (!d.has_nodes() || !semigroup_condition(d).holds || !congruence_condition(g).holds) continue;
    const auto pkg = build_splice_equations(g);
    ++built;
    EXPECT_EQ(pkg.equations().size(), pkg.variables.size() - 2) << path;
    for (const auto& node : pkg.nodes) {
      EXPECT_TRUE(minors_nonzero_oracle(node.coefficients)) << path;
      for (const auto& eq : node.equations) {
        EXPECT_EQ(eq.weighted_degree(node.variable_weights), node.weight) << path;
        for (const auto& [e, c] : eq.terms()) EXPECT_EQ(pkg.characters.character_of(e), node.character) << path;
      }
    }
  }
  EXPECT_GT(built, 8);
}

TEST(BciExponents, OneNodeGraphs) {
  EXPECT_EQ(bci_exponents(corpus_graph("e7")), (std::vector<Integer>{2, 3, 4}));
  EXPECT_EQ(bci_exponents(corpus_graph("e8")), (std::vector<Integer>{2, 3, 5}));
  EXPECT_EQ(bci_exponents(corpus_graph("brieskorn-2-3-7")), (std::vector<Integer>{2, 3, 7}));
  EXPECT_THROW(bci_exponents(corpus_graph("two-node")), PreconditionError);
  for (const auto& name : {"e6", "e7", "e8", "d4", "d5", "brieskorn-2-3-7"}) {
    const auto g = corpus_graph(name);
    const auto p = bci_exponents(g);
    const auto pkg = build_splice_equations(g);
    std::set<Exponents> expected;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Exponents e(p.size(), 0);
      e[i] = p[i].convert_to<unsigned>();
      expected.insert(e);
    }
    const auto equations = pkg.equations();
    std::set<Exponents> got;
    for (const auto& [e, c] : equations[0].terms()) got.insert(e);
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(CheckEquivariance, DetectsBrokenEquations) {
  auto pkg = build_splice_equations(corpus_graph("e7"));
  const std::vector<std::string>& v = pkg.variables;
  EXPECT_EQ(pkg.nodes[0].variable_weights, (std::vector<Integer>{12, 8, 6}));
  pkg.nodes[0].equations[0] = parse_polynomial("x^2 + y^2 + z^4", v);
  EXPECT_FALSE(check_equivariance(pkg));
  pkg.nodes[0].equations[0] = parse_polynomial("x^2 - z^4", v);
  EXPECT_TRUE(check_equivariance(pkg));
  pkg.nodes[0].equations[0] = parse_polynomial("x*z^2 + z^4", v);
  EXPECT_TRUE(pkg.nodes[0].equations[0].weighted_degree(pkg.nodes[0].variable_weights).has_value());
  EXPECT_FALSE(check_equivariance(pkg));
}
