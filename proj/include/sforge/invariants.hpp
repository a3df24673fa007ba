#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sforge/discriminant.hpp"
#include "sforge/polynomial.hpp"

namespace sforge {

/// Minimal invariant monomials of a diagonal abelian action.
///
/// Generators are sorted by decreasing total degree, then decreasing
/// lexicographic order of exponent vectors, and named A, B, C, ...
struct InvariantBasis {
  std::vector<std::string> variables;
  std::vector<std::string> names;
  std::vector<Exponents> generators;

  /// Generator images as monomials in the original variables.
  std::vector<Polynomial> images() const;
};

/// A, B, ..., Z, AA, AB, ...
std::string generator_name(std::size_t index);

/// Enumerates invariant monomials up to the Noether bound |G| and keeps the
/// ones not divisible by another invariant. Throws above
/// kMaxEnumeratedGroupOrder.
InvariantBasis invariant_generators(const CharacterAssignment& chars, const Integer& order);

inline constexpr std::size_t kMaxToricRelations = 20000;

/// All binomials G^a - G^b with |a|, |b| <= degree_bound, disjoint supports and
/// equal images, leading (lexicographically larger) term first. Polynomials
/// are over the generator names. Throws PreconditionError beyond
/// kMaxToricRelations.
std::vector<Polynomial> toric_relations(const InvariantBasis& basis, unsigned degree_bound);

struct MembershipCertificate {
  std::vector<Polynomial> cofactors;  ///< target = sum cofactors[i] * generators[i]
  unsigned degree_bound = 0;
};

/// Looks for cofactors of total degree <= bound by exact linear algebra over
/// the finite monomial basis. nullopt means "not found at this bound" only.
std::optional<MembershipCertificate> membership_bounded(const Polynomial& target,
                                                        std::span<const Polynomial> ideal_generators,
                                                        unsigned bound);

bool verify_certificate(const Polynomial& target, std::span<const Polynomial> ideal_generators,
                        const MembershipCertificate& certificate);

}  // namespace sforge
