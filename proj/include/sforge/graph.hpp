#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sforge/exact.hpp"

namespace sforge {

/// One exceptional curve E_i: self-intersection weight and genus.
struct Vertex {
  std::string id;
  std::int64_t weight = -2;
  unsigned genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Weighted resolution dual graph. Vertices keep declaration order; edges are
/// a multiset of unordered index pairs.
///
/// Construction validates: unique ids, no self loops, endpoints in range,
/// weights <= -1, connected. The empty graph is allowed (it is what a smooth
/// point blows down to) but the parser never produces it.
class ResolutionGraph {
 public:
  ResolutionGraph() = default;
  ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Neighbors with multiplicity, in edge order.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t valency(std::size_t i) const { return adjacency_.at(i).size(); }

  bool is_tree() const noexcept;
  /// Tree with every genus 0: the link is a rational homology sphere.
  bool is_qhs_tree() const noexcept;

  /// Same vertices in the same order and the same edge multiset.
  friend bool operator==(const ResolutionGraph& a, const ResolutionGraph& b) {
    return a.vertices_ == b.vertices_ && a.sorted_edges() == b.sorted_edges();
  }

 private:
  std::vector<Edge> sorted_edges() const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Line grammar, '#' starts a comment:
///   vertex <id> weight=<int> [genus=<uint>]
///   edge <id> <id>
ResolutionGraph parse_graph(std::string_view text);
std::string serialize_graph(const ResolutionGraph& g);

/// Symmetric matrix with the weights on the diagonal and edge multiplicities off it.
IntMatrix intersection_matrix(const ResolutionGraph& g);

/// Vertices of valency <= 1 in declaration order; these carry the leaf variables.
std::vector<std::size_t> end_vertices(const ResolutionGraph& g);

/// Throws NotNegativeDefiniteError unless the intersection matrix is negative definite.
void require_negative_definite(const ResolutionGraph& g);
/// Throws NotQhsTreeError unless g is a negative-definite genus-0 tree.
void require_qhs_tree(const ResolutionGraph& g);

/// Solution K of K.E_i = 2 g_i - 2 - E_i.E_i for all i.
RatVector canonical_cycle(const ResolutionGraph& g);
bool is_numerically_gorenstein(const ResolutionGraph& g);

/// Laufer's computation sequence from the reduced cycle sum E_i, adding the
/// lowest-index E_i with Z.E_i > 0 until none is left.
IntVector fundamental_cycle(const ResolutionGraph& g);

enum class SingularityKind { rational, minimally_elliptic, other };

std::string to_string(SingularityKind kind);

struct Classification {
  SingularityKind kind = SingularityKind::other;
  Integer zsq;  ///< Z_o . Z_o
  std::optional<Integer> multiplicity;
  std::optional<Integer> embedding_dimension;
  bool numerically_gorenstein = false;
  IntVector fundamental_cycle;
  RatVector canonical_cycle;
};

/// Rational iff Z_o.(Z_o + K) = -2; minimally elliptic iff Z_o = -K. The
/// minimally elliptic test presumes g is the minimal resolution graph.
Classification classify(const ResolutionGraph& g);

/// Contracts genus-0 (-1)-curves of valency <= 2 (lowest index first) until
/// none remain. Restricted to trees. A lone (-1)-curve contracts to the empty
/// graph.
ResolutionGraph blow_down_minimal(const ResolutionGraph& g);

}  // namespace sforge
