#include "sforge/random_tree.hpp"

namespace sforge {

ResolutionGraph random_negative_definite_tree(std::mt19937_64& rng, std::size_t max_vertices,
                                              std::int64_t max_weight) {
  if (max_vertices == 0 || max_weight < 1) throw PreconditionError("random tree: empty parameter range");
  std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
  std::uniform_int_distribution<std::int64_t> weight_dist(1, max_weight);
  const std::size_t n = size_dist(rng);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.emplace_back(parent(rng), i);
  }
  for (;;) {
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), -weight_dist(rng), 0});
    ResolutionGraph g(std::move(vertices), edges);
    if (is_negative_definite(intersection_matrix(g))) return g;
  }
}

}  // namespace sforge
