#include "sforge/discriminant.hpp"

namespace sforge {

DiscriminantData discriminant_group(const ResolutionGraph& g) {
  require_qhs_tree(g);
  const IntMatrix m = intersection_matrix(g);
  const auto snf = smith_normal_form(m);
  const RatMatrix m_inverse = invert_rational(m);
  const RatMatrix u_inverse = invert_rational(snf.U);

  DiscriminantData data;
  data.order = mp::abs(determinant(m));
  data.dual_basis = m_inverse.transpose();

  const auto diagonal = snf.diagonal();
  for (std::size_t j = 0; j < diagonal.size(); ++j) {
    if (diagonal[j] == 1) continue;
    data.invariant_factors.push_back(diagonal[j]);
    data.generators.push_back(m_inverse * u_inverse.col(static_cast<Eigen::Index>(j)));
  }

  const RatMatrix mq = m.cast<Rational>();
  const auto k = static_cast<Eigen::Index>(data.generators.size());
  data.pairing = RatMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto& gi = data.generators[static_cast<std::size_t>(i)];
      const auto& gj = data.generators[static_cast<std::size_t>(j)];
      data.pairing(i, j) = fractional_part(pairing(gi, mq, gj));
    }
  }
  return data;
}

Integer CharacterAssignment::group_order() const {
  Integer order = 1;
  for (const auto& o : orders) order *= o;
  return order;
}

Character CharacterAssignment::character_of(const Exponents& e) const {
  if (e.size() != phases.size()) throw DimensionError("character_of: exponent vector has wrong length");
  Character c = trivial_character();
  for (std::size_t w = 0; w < e.size(); ++w) {
    if (e[w] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += phases[w][j] * e[w];
  }
  for (auto& phase : c) phase = fractional_part(phase);
  return c;
}

CharacterAssignment leaf_characters(const ResolutionGraph& g) {
  return leaf_characters(g, discriminant_group(g));
}

CharacterAssignment leaf_characters(const ResolutionGraph& g, const DiscriminantData& data) {
  const RatMatrix mq = intersection_matrix(g).cast<Rational>();
  CharacterAssignment chars;
  chars.orders = data.invariant_factors;
  chars.sources = end_vertices(g);
  for (std::size_t w : chars.sources) {
    chars.variables.push_back(g.vertex(w).id);
    const RatVector dual = data.dual_basis.row(static_cast<Eigen::Index>(w)).transpose();
    Character c;
    for (const auto& gen : data.generators) c.push_back(fractional_part(pairing(gen, mq, dual)));
    chars.phases.push_back(std::move(c));
  }
  return chars;
}

Integer dual_class_order(const ResolutionGraph& g, std::size_t i) {
  require_qhs_tree(g);
  if (i >= g.size()) throw std::out_of_range("dual_class_order: vertex index out of range");
  const RatMatrix inverse = invert_rational(intersection_matrix(g));
  return lcm_of_denominators(inverse.col(static_cast<Eigen::Index>(i)));
}

std::vector<Character> group_actions(const CharacterAssignment& chars) {
  const Integer order = chars.group_order();
  if (order > kMaxEnumeratedGroupOrder) {
    throw PreconditionError("group of order " + order.str() + " is too large to enumerate (cap " +
                            std::to_string(kMaxEnumeratedGroupOrder) + ")");
  }
  const std::size_t k = chars.generator_count();
  std::vector<unsigned> radix;
  for (const auto& o : chars.orders) radix.push_back(o.convert_to<unsigned>());

  std::vector<Character> actions;
  std::vector<unsigned> digits(k, 0);
  for (;;) {
    Character action;
    for (const auto& phase : chars.phases) {
      Rational total = 0;
      for (std::size_t j = 0; j < k; ++j) total += phase[j] * digits[j];
      action.push_back(fractional_part(total));
    }
    actions.push_back(std::move(action));

    std::size_t j = 0;
    while (j < k && ++digits[j] == radix[j]) digits[j++] = 0;
    if (j == k) break;
  }
  return actions;
}

bool is_faithful(const CharacterAssignment& chars) {
  const auto actions = group_actions(chars);
  for (std::size_t i = 1; i < actions.size(); ++i) {
    bool trivial = true;
    for (const auto& phase : actions[i]) trivial = trivial && phase == 0;
    if (trivial) return false;
  }
  return true;
}

std::string character_to_string(const Character& c) {
  std::string out = "(";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) out += ", ";
    out += to_string(c[j]);
  }
  return out + ")";
}

}  // namespace sforge
