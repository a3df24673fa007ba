#include "sforge/equations.hpp"

#include <algorithm>
#include <stdexcept>

namespace sforge {

std::vector<Exponents> admissible_monomials(const SemigroupResult& semigroup, std::size_t node,
                                            std::size_t edge) {
  return semigroup.at(node, edge).solutions;
}

std::vector<Exponents> admissible_monomials(const SemigroupResult& semigroup, std::size_t node,
                                            std::size_t edge, const CharacterAssignment& chars,
                                            const Character& chi) {
  std::vector<Exponents> out;
  for (const auto& alpha : semigroup.at(node, edge).solutions) {
    if (chars.character_of(alpha) == chi) out.push_back(alpha);
  }
  return out;
}

CongruenceResult congruence_condition(const SpliceDiagram& d, const SemigroupResult& semigroup,
                                      const CharacterAssignment& chars) {
  if (!semigroup.holds) {
    const auto& w = semigroup.directions.at(semigroup.failing.front());
    throw SemigroupFailureError("semigroup condition fails at " + d.direction_label(w.node, w.edge));
  }
  CongruenceResult result;
  for (std::size_t v : d.nodes()) {
    NodeChoice choice;
    choice.node = v;
    choice.edges = d.edges_at(v);
    for (std::size_t e : choice.edges) {
      std::vector<Character> seen;
      for (const auto& alpha : semigroup.at(v, e).solutions) seen.push_back(chars.character_of(alpha));
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      choice.attained.push_back(std::move(seen));
    }

    // Characters attained in every direction; candidates come from the first edge.
    for (const auto& chi : choice.attained.front()) {
      const bool common = std::all_of(choice.attained.begin() + 1, choice.attained.end(),
                                      [&](const std::vector<Character>& set) {
                                        return std::binary_search(set.begin(), set.end(), chi);
                                      });
      if (common) {
        choice.character = chi;
        break;
      }
    }
    if (choice.character) {
      for (std::size_t e : choice.edges) {
        choice.monomials.push_back(admissible_monomials(semigroup, v, e, chars, *choice.character).front());
      }
    } else {
      result.holds = false;
      result.failing.push_back(result.nodes.size());
    }
    result.nodes.push_back(std::move(choice));
  }
  return result;
}

CongruenceResult congruence_condition(const ResolutionGraph& g) {
  const SpliceDiagram d = to_splice_diagram(g);
  return congruence_condition(d, semigroup_condition(d), leaf_characters(g));
}

bool all_maximal_minors_nonzero(const IntMatrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  if (rows > cols) return false;
  if (rows == 0) return true;
  std::vector<std::size_t> pick(rows);
  for (std::size_t i = 0; i < rows; ++i) pick[i] = i;
  for (;;) {
    IntMatrix minor(m.rows(), m.rows());
    for (std::size_t j = 0; j < rows; ++j) minor.col(static_cast<Eigen::Index>(j)) = m.col(static_cast<Eigen::Index>(pick[j]));
    if (determinant(minor) == 0) return false;
    // next combination
    std::size_t i = rows;
    while (i > 0 && pick[i - 1] == cols - rows + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t k = i; k < rows; ++k) pick[k] = pick[k - 1] + 1;
  }
}

IntMatrix generic_coefficients(std::size_t valency) {
  if (valency < 3) throw PreconditionError("generic_coefficients: valency must be at least 3");
  const auto rows = static_cast<Eigen::Index>(valency - 2);
  const auto cols = static_cast<Eigen::Index>(valency);
  IntMatrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    Integer power = 1;
    for (Eigen::Index i = 0; i < rows; ++i) {
      a(i, j) = power;
      power *= j + 1;
    }
  }
  if (!all_maximal_minors_nonzero(a)) {
    throw std::logic_error("generic_coefficients: Vandermonde segment has a vanishing maximal minor");
  }
  return a;
}

std::vector<Polynomial> EquationsPackage::equations() const {
  std::vector<Polynomial> all;
  for (const auto& node : nodes) all.insert(all.end(), node.equations.begin(), node.equations.end());
  return all;
}

EquationsPackage build_splice_equations(const ResolutionGraph& g) {
  const SpliceDiagram d = to_splice_diagram(g);
  if (!d.has_nodes()) throw EquationsRefusal("no nodes: cyclic quotient case has no splice equations");

  const SemigroupResult semigroup = semigroup_condition(d);
  if (!semigroup.holds) {
    const auto& w = semigroup.directions.at(semigroup.failing.front());
    throw EquationsRefusal("semigroup condition fails at " + d.direction_label(w.node, w.edge),
                           d.vertex(w.node).name, d.direction_label(w.node, w.edge));
  }

  EquationsPackage pkg;
  pkg.characters = leaf_characters(g);
  pkg.variables = d.leaf_names();
  const CongruenceResult congruence = congruence_condition(d, semigroup, pkg.characters);
  if (!congruence.holds) {
    const auto& bad = congruence.nodes.at(congruence.failing.front());
    throw EquationsRefusal("congruence condition fails at node " + d.vertex(bad.node).name,
                           d.vertex(bad.node).name);
  }

  for (const auto& choice : congruence.nodes) {
    NodeEquations node;
    node.node = choice.node;
    node.name = d.vertex(choice.node).name;
    node.weight = node_weight(d, choice.node);
    node.variable_weights = leaf_weights(d, choice.node);
    node.edges = choice.edges;
    for (std::size_t e : choice.edges) node.directions.push_back(d.direction_label(choice.node, e));
    node.monomials = choice.monomials;
    node.character = *choice.character;
    node.coefficients = generic_coefficients(choice.edges.size());
    for (Eigen::Index i = 0; i < node.coefficients.rows(); ++i) {
      Polynomial eq(pkg.variables);
      for (std::size_t k = 0; k < node.monomials.size(); ++k) {
        eq.add_term(node.monomials[k], Rational(node.coefficients(i, static_cast<Eigen::Index>(k))));
      }
      node.equations.push_back(std::move(eq));
    }
    pkg.nodes.push_back(std::move(node));
  }

  if (!check_equivariance(pkg)) {
    throw std::logic_error("build_splice_equations: emitted system is not equivariant");
  }
  if (pkg.equations().size() + 2 != pkg.variables.size()) {
    throw std::logic_error("build_splice_equations: expected t - 2 equations");
  }
  return pkg;
}

std::vector<Integer> bci_exponents(const ResolutionGraph& g) {
  const SpliceDiagram d = to_splice_diagram(g);
  if (d.nodes().size() != 1) {
    throw PreconditionError("bci_exponents: splice diagram has " + std::to_string(d.nodes().size()) +
                            " nodes, expected exactly one");
  }
  const std::size_t v = d.nodes().front();
  std::vector<Integer> exponents(d.leaves().size());
  for (std::size_t e : d.edges_at(v)) {
    exponents.at(d.leaves_beyond(v, e).front()) = d.weight(v, e);
  }
  return exponents;
}

bool check_equivariance(const EquationsPackage& pkg) {
  for (const auto& node : pkg.nodes) {
    if (node.variable_weights.size() != pkg.variables.size()) return false;
    for (const auto& eq : node.equations) {
      const auto w = eq.weighted_degree(node.variable_weights);
      if (!w || *w != node.weight) return false;
      std::optional<Character> common;
      for (const auto& [e, c] : eq.terms()) {
        const Character chi = pkg.characters.character_of(e);
        if (common && chi != *common) return false;
        common = chi;
      }
    }
  }
  return true;
}

}  // namespace sforge
