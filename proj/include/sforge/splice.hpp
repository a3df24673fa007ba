#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/graph.hpp"
#include "sforge/polynomial.hpp"

namespace sforge {

/// A vertex of the splice diagram: a resolution-graph vertex of valency != 2.
struct SpliceVertex {
  std::size_t source = 0;  ///< index into the resolution graph
  std::string name;        ///< resolution-graph id
  bool is_node = false;    ///< valency >= 3
};

/// A splice-diagram edge, i.e. a maximal chain of valency-2 curves between
/// two diagram vertices. Weights live on node ends only.
struct SpliceEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> interior;  ///< resolution vertices strictly between a and b
  std::optional<Integer> weight_a;
  std::optional<Integer> weight_b;
};

/// Generalized splice diagram derived from a negative-definite QHS tree.
///
/// Leaves are the resolution vertices of valency <= 1 in declaration order;
/// their position in `leaves()` is the index of the matching variable. A
/// diagram without nodes (chains and single curves) is degenerate.
class SpliceDiagram {
 public:
  SpliceDiagram() = default;
  SpliceDiagram(std::vector<SpliceVertex> vertices, std::vector<SpliceEdge> edges);

  const std::vector<SpliceVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<SpliceEdge>& edges() const noexcept { return edges_; }
  const SpliceVertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const SpliceEdge& edge(std::size_t e) const { return edges_.at(e); }

  /// Diagram vertex indices of the nodes / leaves, in declaration order.
  const std::vector<std::size_t>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& leaves() const noexcept { return leaves_; }
  bool has_nodes() const noexcept { return !nodes_.empty(); }
  std::vector<std::string> leaf_names() const;
  std::optional<std::size_t> find_vertex(const std::string& name) const;

  /// Edges at v, ordered by the smallest leaf position beyond each edge.
  const std::vector<std::size_t>& edges_at(std::size_t v) const { return incident_.at(v); }
  std::size_t other_end(std::size_t e, std::size_t v) const;
  /// d_{ve}; v must be a node end of e.
  const Integer& weight(std::size_t v, std::size_t e) const;
  /// Leaf positions reachable from v through e.
  const std::vector<std::size_t>& leaves_beyond(std::size_t v, std::size_t e) const;
  /// Edges on the path from v to w.
  std::vector<std::size_t> path(std::size_t v, std::size_t w) const;
  /// Readable label for (v, e): "v->w" where w is the far end of e.
  std::string direction_label(std::size_t v, std::size_t e) const;

 private:
  std::vector<SpliceVertex> vertices_;
  std::vector<SpliceEdge> edges_;
  std::vector<std::size_t> nodes_;
  std::vector<std::size_t> leaves_;
  std::vector<std::vector<std::size_t>> incident_;
  // beyond_[v][k] = leaf positions beyond incident_[v][k]
  std::vector<std::vector<std::vector<std::size_t>>> beyond_;
};

/// Collapses valency-2 chains; d_{ve} = |det| of the intersection matrix of
/// the component of (graph minus v) that contains the first curve along e.
/// Throws NotQhsTreeError for cycles, positive genus or indefinite input.
SpliceDiagram to_splice_diagram(const ResolutionGraph& g);

/// Product of the two weights on an internal edge minus the product of the
/// weights adjacent to it.
Integer edge_determinant(const SpliceDiagram& d, std::size_t e);

/// Product of the weights adjacent to, but not on, the path from v to w.
/// For a node v == w this is the node weight d_v.
Integer linking_number(const SpliceDiagram& d, std::size_t v, std::size_t w);

/// d_v: product of the weights at node v.
Integer node_weight(const SpliceDiagram& d, std::size_t v);

/// Linking numbers from node v to every leaf, indexed by leaf position.
std::vector<Integer> leaf_weights(const SpliceDiagram& d, std::size_t v);

struct ZhsConditions {
  bool pairwise_coprime = true;
  bool leaf_weights_exceed_one = true;
  bool edge_determinants_positive = true;

  bool all() const noexcept {
    return pairwise_coprime && leaf_weights_exceed_one && edge_determinants_positive;
  }
};

ZhsConditions check_zhs_conditions(const SpliceDiagram& d);

/// |det| of the intersection matrix is 1. When true, the splice-diagram
/// weight conditions are cross-checked and a violation throws std::logic_error.
bool is_zhs(const ResolutionGraph& g);

/// Admissible monomials for one (node, edge) direction.
struct DirectionWitness {
  std::size_t node = 0;
  std::size_t edge = 0;
  std::vector<std::size_t> leaves;  ///< leaf positions beyond the edge
  std::vector<Integer> linking;     ///< l_{vw} for those leaves, same order
  Integer node_weight;
  /// Full-length exponent vectors (zero off the branch), increasing lex order.
  std::vector<Exponents> solutions;
  bool truncated = false;
};

struct SemigroupResult {
  bool holds = true;
  std::vector<DirectionWitness> directions;  ///< nodes in order, edges in edges_at order
  std::vector<std::size_t> failing;          ///< indices into directions

  const DirectionWitness& at(std::size_t node, std::size_t edge) const;
};

inline constexpr std::size_t kMaxWitnessSolutions = 10000;

/// For every node v and edge e, enumerates all alpha over the leaves beyond
/// e with sum alpha_w l_{vw} = d_v (capped at kMaxWitnessSolutions).
SemigroupResult semigroup_condition(const SpliceDiagram& d);

/// Indented text form: one node per line, weights in parentheses.
std::string render_splice_diagram(const SpliceDiagram& d);

}  // namespace sforge
