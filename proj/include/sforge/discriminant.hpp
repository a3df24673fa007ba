#pragma once

#include <string>
#include <vector>

#include "sforge/graph.hpp"
#include "sforge/polynomial.hpp"

namespace sforge {

/// A character of the discriminant group, given by its value on each
/// canonical generator as a phase in [0, 1): g acts by exp(2 pi i phase).
using Character = std::vector<Rational>;

/// The discriminant group D = coker(E -> E*) of an intersection matrix M.
///
/// Generators come from the Smith form U M V = D: generator j is the class of
/// M^{-1} U^{-1} e_j, written in E (x) Q coordinates, for every invariant
/// factor d_j > 1.
struct DiscriminantData {
  Integer order;                           ///< |det M|
  std::vector<Integer> invariant_factors;  ///< nontrivial ones, d_1 | d_2 | ...
  std::vector<RatVector> generators;
  RatMatrix dual_basis;  ///< row i is e_i, so e_i . E_j = delta_ij
  RatMatrix pairing;     ///< generator pairings, reduced mod 1
};

DiscriminantData discriminant_group(const ResolutionGraph& g);

/// Diagonal action of D on the leaf variables.
struct CharacterAssignment {
  std::vector<std::string> variables;   ///< leaf ids, declaration order
  std::vector<std::size_t> sources;     ///< graph vertex of each leaf
  std::vector<Integer> orders;          ///< order of each generator
  std::vector<Character> phases;        ///< phases[leaf][generator]

  std::size_t generator_count() const noexcept { return orders.size(); }
  Integer group_order() const;
  /// Character by which the monomial z^e transforms.
  Character character_of(const Exponents& e) const;
  Character trivial_character() const { return Character(orders.size(), Rational(0)); }
};

/// Phase of generator [g] on z_w is the fractional part of g . e_w, where
/// e_w is the dual basis element of the end curve E_w.
CharacterAssignment leaf_characters(const ResolutionGraph& g);
CharacterAssignment leaf_characters(const ResolutionGraph& g, const DiscriminantData& data);

/// Least n >= 1 with n e_i integral.
Integer dual_class_order(const ResolutionGraph& g, std::size_t i);

inline constexpr unsigned kMaxEnumeratedGroupOrder = 2000;

/// Per-leaf phase vectors of every group element, identity first, in
/// mixed-radix order over the generators. Throws above kMaxEnumeratedGroupOrder.
std::vector<Character> group_actions(const CharacterAssignment& chars);

/// Only the identity acts trivially on every leaf variable.
bool is_faithful(const CharacterAssignment& chars);

std::string character_to_string(const Character& c);

}  // namespace sforge
