#include "sforge/splice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sforge {

// SpliceDiagram ----------------------------------------------------------------

SpliceDiagram::SpliceDiagram(std::vector<SpliceVertex> vertices, std::vector<SpliceEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  incident_.assign(n, {});
  beyond_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    (vertices_[v].is_node ? nodes_ : leaves_).push_back(v);
  }
  std::vector<std::size_t> leaf_position(n, n);
  for (std::size_t k = 0; k < leaves_.size(); ++k) leaf_position[leaves_[k]] = k;

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (const auto* w : {&edges_[e].weight_a, &edges_[e].weight_b}) {
      if (*w && **w < 1) throw PreconditionError("splice weight " + w->value().str() + " is below 1");
    }
    incident_.at(edges_[e].a).push_back(e);
    incident_.at(edges_[e].b).push_back(e);
  }

  auto collect = [&](std::size_t from, std::size_t via) {
    std::vector<std::size_t> found;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{other_end(via, from), via}};
    while (!stack.empty()) {
      const auto [u, came_by] = stack.back();
      stack.pop_back();
      if (leaf_position[u] < n) found.push_back(leaf_position[u]);
      for (std::size_t f : incident_[u]) {
        if (f != came_by) stack.emplace_back(other_end(f, u), f);
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  };

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> branches;
    for (std::size_t e : incident_[v]) branches.emplace_back(collect(v, e), e);
    std::sort(branches.begin(), branches.end());
    incident_[v].clear();
    for (auto& [leaves, e] : branches) {
      incident_[v].push_back(e);
      beyond_[v].push_back(std::move(leaves));
    }
  }
}

std::vector<std::string> SpliceDiagram::leaf_names() const {
  std::vector<std::string> names;
  for (std::size_t v : leaves_) names.push_back(vertices_[v].name);
  return names;
}

std::optional<std::size_t> SpliceDiagram::find_vertex(const std::string& name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return std::nullopt;
}

std::size_t SpliceDiagram::other_end(std::size_t e, std::size_t v) const {
  const auto& edge = edges_.at(e);
  if (edge.a == v) return edge.b;
  if (edge.b == v) return edge.a;
  throw std::out_of_range("splice edge is not incident to the vertex");
}

const Integer& SpliceDiagram::weight(std::size_t v, std::size_t e) const {
  const auto& edge = edges_.at(e);
  const std::optional<Integer>* w =
      edge.a == v ? &edge.weight_a : edge.b == v ? &edge.weight_b : nullptr;
  if (w == nullptr || !w->has_value()) {
    throw PreconditionError("no weight: '" + vertices_.at(v).name + "' is not a node end of this edge");
  }
  return **w;
}

const std::vector<std::size_t>& SpliceDiagram::leaves_beyond(std::size_t v, std::size_t e) const {
  const auto& inc = incident_.at(v);
  const auto it = std::find(inc.begin(), inc.end(), e);
  if (it == inc.end()) throw std::out_of_range("splice edge is not incident to the vertex");
  return beyond_[v][static_cast<std::size_t>(it - inc.begin())];
}

std::vector<std::size_t> SpliceDiagram::path(std::size_t v, std::size_t w) const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> via(n, edges_.size());
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{v};
  seen.at(v) = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t e : incident_[u]) {
      const std::size_t x = other_end(e, u);
      if (!seen[x]) {
        seen[x] = true;
        via[x] = e;
        queue.push_back(x);
      }
    }
  }
  if (!seen.at(w)) throw std::out_of_range("splice vertices are not connected");
  std::vector<std::size_t> edges;
  for (std::size_t u = w; u != v; u = other_end(via[u], u)) edges.push_back(via[u]);
  std::reverse(edges.begin(), edges.end());
  return edges;
}

std::string SpliceDiagram::direction_label(std::size_t v, std::size_t e) const {
  return vertices_.at(v).name + "->" + vertices_.at(other_end(e, v)).name;
}

// Construction -------------------------------------------------------------------

namespace {

/// |det| of the intersection matrix restricted to the component of
/// (g minus removed) that contains start.
Integer branch_determinant(const ResolutionGraph& g, const IntMatrix& m, std::size_t removed,
                           std::size_t start) {
  std::vector<std::size_t> component{start};
  std::vector<bool> seen(g.size(), false);
  seen[removed] = true;
  seen[start] = true;
  for (std::size_t head = 0; head < component.size(); ++head) {
    for (std::size_t w : g.neighbors(component[head])) {
      if (!seen[w]) {
        seen[w] = true;
        component.push_back(w);
      }
    }
  }
  std::sort(component.begin(), component.end());
  const auto k = static_cast<Eigen::Index>(component.size());
  IntMatrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = m(static_cast<Eigen::Index>(component[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(component[static_cast<std::size_t>(j)]));
    }
  }
  return mp::abs(determinant(sub));
}

}  // namespace

SpliceDiagram to_splice_diagram(const ResolutionGraph& g) {
  require_qhs_tree(g);
  const IntMatrix m = intersection_matrix(g);

  std::vector<SpliceVertex> vertices;
  std::vector<std::size_t> delta_of(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.valency(i) == 2) continue;
    delta_of[i] = vertices.size();
    vertices.push_back({i, g.vertex(i).id, g.valency(i) >= 3});
  }

  std::vector<SpliceEdge> edges;
  for (const auto& sv : vertices) {
    const std::size_t u = sv.source;
    for (std::size_t first : g.neighbors(u)) {
      SpliceEdge edge;
      std::size_t prev = u;
      std::size_t cur = first;
      while (g.valency(cur) == 2) {
        edge.interior.push_back(cur);
        const auto& nb = g.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (delta_of[u] > delta_of[cur]) continue;  // recorded from the other end
      edge.a = delta_of[u];
      edge.b = delta_of[cur];
      const std::size_t first_from_b = edge.interior.empty() ? u : edge.interior.back();
      if (vertices[edge.a].is_node) edge.weight_a = branch_determinant(g, m, u, first);
      if (vertices[edge.b].is_node) edge.weight_b = branch_determinant(g, m, cur, first_from_b);
      edges.push_back(std::move(edge));
    }
  }
  return SpliceDiagram(std::move(vertices), std::move(edges));
}

// Weights ------------------------------------------------------------------------

Integer edge_determinant(const SpliceDiagram& d, std::size_t e) {
  const auto& edge = d.edge(e);
  if (!d.vertex(edge.a).is_node || !d.vertex(edge.b).is_node) {
    throw PreconditionError("edge_determinant: edge " + d.direction_label(edge.a, e) +
                            " touches a leaf");
  }
  Integer adjacent = 1;
  for (std::size_t end : {edge.a, edge.b}) {
    for (std::size_t f : d.edges_at(end)) {
      if (f != e) adjacent *= d.weight(end, f);
    }
  }
  return d.weight(edge.a, e) * d.weight(edge.b, e) - adjacent;
}

Integer node_weight(const SpliceDiagram& d, std::size_t v) {
  if (!d.vertex(v).is_node) throw PreconditionError("node_weight: '" + d.vertex(v).name + "' is a leaf");
  Integer product = 1;
  for (std::size_t e : d.edges_at(v)) product *= d.weight(v, e);
  return product;
}

Integer linking_number(const SpliceDiagram& d, std::size_t v, std::size_t w) {
  if (v == w) {
    if (d.vertex(v).is_node) return node_weight(d, v);
    throw PreconditionError("linking_number: leaf '" + d.vertex(v).name + "' linked with itself");
  }
  const std::vector<std::size_t> on_path = d.path(v, w);
  Integer product = 1;
  std::size_t u = v;
  auto absorb = [&](std::size_t x) {
    if (!d.vertex(x).is_node) return;
    for (std::size_t f : d.edges_at(x)) {
      if (std::find(on_path.begin(), on_path.end(), f) == on_path.end()) product *= d.weight(x, f);
    }
  };
  absorb(u);
  for (std::size_t e : on_path) {
    u = d.other_end(e, u);
    absorb(u);
  }
  return product;
}

std::vector<Integer> leaf_weights(const SpliceDiagram& d, std::size_t v) {
  std::vector<Integer> out;
  for (std::size_t leaf : d.leaves()) out.push_back(linking_number(d, v, leaf));
  return out;
}

ZhsConditions check_zhs_conditions(const SpliceDiagram& d) {
  ZhsConditions c;
  for (std::size_t v : d.nodes()) {
    const auto& inc = d.edges_at(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (mp::gcd(d.weight(v, inc[i]), d.weight(v, inc[j])) != 1) c.pairwise_coprime = false;
      }
      if (!d.vertex(d.other_end(inc[i], v)).is_node && d.weight(v, inc[i]) <= 1) {
        c.leaf_weights_exceed_one = false;
      }
    }
  }
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edge(e);
    if (d.vertex(edge.a).is_node && d.vertex(edge.b).is_node && edge_determinant(d, e) <= 0) {
      c.edge_determinants_positive = false;
    }
  }
  return c;
}

bool is_zhs(const ResolutionGraph& g) {
  if (g.empty() || !g.is_qhs_tree()) return false;
  const IntMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m)) return false;
  if (mp::abs(determinant(m)) != 1) return false;
  const SpliceDiagram d = to_splice_diagram(g);
  if (!check_zhs_conditions(d).all()) {
    throw std::logic_error("unimodular graph produced a splice diagram violating the ZHS weight conditions");
  }
  return true;
}

// Semigroup condition ------------------------------------------------------------

const DirectionWitness& SemigroupResult::at(std::size_t node, std::size_t edge) const {
  for (const auto& w : directions) {
    if (w.node == node && w.edge == edge) return w;
  }
  throw std::out_of_range("no semigroup witness for this direction");
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(std::vector<std::int64_t> coins, std::int64_t target, std::vector<std::size_t> slots,
                std::size_t width)
      : coins_(std::move(coins)), target_(target), slots_(std::move(slots)), current_(width, 0) {
    const std::size_t k = coins_.size();
    suffix_gcd_.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) suffix_gcd_[i] = std::gcd(suffix_gcd_[i + 1], coins_[i]);
    constexpr std::int64_t kTableLimit = 20'000'000;
    if (target_ <= kTableLimit) {
      // reachable_[i][r]: r is a nonnegative combination of coins_[i..].
      reachable_.assign(k + 1, std::vector<bool>(static_cast<std::size_t>(target_) + 1, false));
      reachable_[k][0] = true;
      for (std::size_t i = k; i-- > 0;) {
        auto& row = reachable_[i];
        const auto& next = reachable_[i + 1];
        for (std::int64_t r = 0; r <= target_; ++r) {
          const auto ur = static_cast<std::size_t>(r);
          row[ur] = next[ur] || (r >= coins_[i] && row[ur - static_cast<std::size_t>(coins_[i])]);
        }
      }
    }
  }

  void run(DirectionWitness& out) {
    out_ = &out;
    if (feasible(0, target_)) descend(0, target_);
  }

 private:
  bool feasible(std::size_t i, std::int64_t remaining) const {
    if (i == coins_.size()) return remaining == 0;
    if (remaining % suffix_gcd_[i] != 0) return false;
    if (!reachable_.empty()) return reachable_[i][static_cast<std::size_t>(remaining)];
    return true;
  }

  void descend(std::size_t i, std::int64_t remaining) {
    if (out_->solutions.size() >= kMaxWitnessSolutions) {
      out_->truncated = true;
      return;
    }
    if (i == coins_.size()) {
      if (remaining == 0) out_->solutions.push_back(current_);
      return;
    }
    for (std::int64_t a = 0; a * coins_[i] <= remaining; ++a) {
      const std::int64_t rest = remaining - a * coins_[i];
      if (!feasible(i + 1, rest)) continue;
      current_[slots_[i]] = static_cast<unsigned>(a);
      descend(i + 1, rest);
      if (out_->truncated) break;
    }
    current_[slots_[i]] = 0;
  }

  std::vector<std::int64_t> coins_;
  std::int64_t target_;
  std::vector<std::size_t> slots_;
  Exponents current_;
  std::vector<std::int64_t> suffix_gcd_;
  std::vector<std::vector<bool>> reachable_;
  DirectionWitness* out_ = nullptr;
};

}  // namespace

SemigroupResult semigroup_condition(const SpliceDiagram& d) {
  SemigroupResult result;
  const std::size_t t = d.leaves().size();
  for (std::size_t v : d.nodes()) {
    const Integer dv = node_weight(d, v);
    for (std::size_t e : d.edges_at(v)) {
      DirectionWitness w;
      w.node = v;
      w.edge = e;
      w.node_weight = dv;
      w.leaves = d.leaves_beyond(v, e);
      std::vector<std::int64_t> coins;
      for (std::size_t pos : w.leaves) {
        w.linking.push_back(linking_number(d, v, d.leaves()[pos]));
        coins.push_back(to_int64(w.linking.back()));
      }
      WitnessSearch(std::move(coins), to_int64(dv), w.leaves, t).run(w);
      if (w.solutions.empty()) {
        result.holds = false;
        result.failing.push_back(result.directions.size());
      }
      result.directions.push_back(std::move(w));
    }
  }
  return result;
}

// Rendering ----------------------------------------------------------------------

std::string render_splice_diagram(const SpliceDiagram& d) {
  std::ostringstream out;
  if (!d.has_nodes()) {
    out << "no nodes: cyclic quotient case";
    if (!d.leaves().empty()) {
      out << " (ends:";
      for (const auto& name : d.leaf_names()) out << ' ' << name;
      out << ')';
    }
    out << '\n';
    return out.str();
  }
  for (std::size_t v : d.nodes()) {
    out << "node " << d.vertex(v).name << "  d=" << node_weight(d, v) << '\n';
    for (std::size_t e : d.edges_at(v)) {
      const std::size_t w = d.other_end(e, v);
      out << "  (" << d.weight(v, e) << ") ";
      if (d.vertex(w).is_node) {
        out << "-- (" << d.weight(w, e) << ") node " << d.vertex(w).name
            << "  edge_det=" << edge_determinant(d, e);
      } else {
        out << "leaf " << d.vertex(w).name;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace sforge
