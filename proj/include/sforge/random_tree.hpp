#pragma once

#include <random>

#include "sforge/graph.hpp"

namespace sforge {

/// Random genus-0 tree on 1..max_vertices curves with weights in
/// [-max_weight, -1], redrawn until the intersection matrix is negative
/// definite. Vertex ids are v0, v1, ...; vertex i > 0 hangs off a uniformly
/// chosen earlier vertex.
ResolutionGraph random_negative_definite_tree(std::mt19937_64& rng, std::size_t max_vertices,
                                              std::int64_t max_weight = 5);

}  // namespace sforge
