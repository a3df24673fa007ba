#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/discriminant.hpp"
#include "sforge/polynomial.hpp"
#include "sforge/splice.hpp"

namespace sforge {

/// Semigroup witnesses for (node, edge), optionally restricted to monomials
/// transforming by `chi` under `chars`.
std::vector<Exponents> admissible_monomials(const SemigroupResult& semigroup, std::size_t node,
                                            std::size_t edge);
std::vector<Exponents> admissible_monomials(const SemigroupResult& semigroup, std::size_t node,
                                            std::size_t edge, const CharacterAssignment& chars,
                                            const Character& chi);

/// One node's choice: a common character and one admissible monomial per edge.
struct NodeChoice {
  std::size_t node = 0;
  std::vector<std::size_t> edges;             ///< edges_at(node) order
  std::vector<std::vector<Character>> attained;  ///< distinct characters per edge, ascending
  std::optional<Character> character;         ///< empty when the node fails
  std::vector<Exponents> monomials;           ///< per edge, empty when the node fails
};

struct CongruenceResult {
  bool holds = true;
  std::vector<NodeChoice> nodes;
  std::vector<std::size_t> failing;  ///< indices into nodes
};

/// For each node, looks for a character shared by an admissible monomial in
/// every direction. Candidates are tried in ascending order of their phase
/// vectors; per edge the lexicographically smallest monomial is taken.
/// Throws SemigroupFailureError when the semigroup condition fails.
CongruenceResult congruence_condition(const SpliceDiagram& d, const SemigroupResult& semigroup,
                                      const CharacterAssignment& chars);
CongruenceResult congruence_condition(const ResolutionGraph& g);

/// Rows 1, e, e^2, ... over columns e = 1..valency: a (valency-2) x valency
/// Vandermonde segment. Every maximal minor is checked to be nonzero.
IntMatrix generic_coefficients(std::size_t valency);

bool all_maximal_minors_nonzero(const IntMatrix& m);

struct NodeEquations {
  std::size_t node = 0;
  std::string name;
  Integer weight;                       ///< d_v
  std::vector<Integer> variable_weights;  ///< l_{vw} per leaf variable
  std::vector<std::size_t> edges;
  std::vector<std::string> directions;  ///< "v->w" label per edge
  std::vector<Exponents> monomials;     ///< chosen admissible monomial per edge
  IntMatrix coefficients;               ///< (valency-2) x valency
  Character character;
  std::vector<Polynomial> equations;
};

struct EquationsPackage {
  std::vector<std::string> variables;
  std::vector<NodeEquations> nodes;
  CharacterAssignment characters;

  std::vector<Polynomial> equations() const;
};

/// The weighted-homogeneous splice system: t - 2 equations over the t leaf
/// variables. Throws EquationsRefusal when the diagram has no node or the
/// semigroup / congruence condition fails.
EquationsPackage build_splice_equations(const ResolutionGraph& g);

/// BCI exponents p_1..p_t of a one-node diagram, in leaf order.
std::vector<Integer> bci_exponents(const ResolutionGraph& g);

/// Every equation is weighted-homogeneous of its node's weight and all its
/// monomials share one character.
bool check_equivariance(const EquationsPackage& pkg);

}  // namespace sforge
