#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sforge/graph.hpp"

namespace testing_support {

inline std::filesystem::path corpus_dir() { return SFORGE_CORPUS_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline sforge::ResolutionGraph corpus_graph(const std::string& name) {
  return sforge::parse_graph(read_text(corpus_dir() / (name + ".graph")));
}

/// Every graph file in the corpus, random trees included, sorted by path.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".graph") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::Tree to_tree(const sforge::ResolutionGraph& g) {
  oracle::Tree t;
  for (const auto& v : g.vertices()) t.weight.push_back(v.weight);
  t.edges = g.edges();
  return t;
}

inline sforge::ResolutionGraph from_tree(const oracle::Tree& t) {
  std::vector<sforge::Vertex> vertices;
  for (std::size_t i = 0; i < t.size(); ++i) vertices.push_back({"v" + std::to_string(i), t.weight[i], 0});
  return sforge::ResolutionGraph(std::move(vertices), t.edges);
}

inline oracle::Mat to_mat(const sforge::IntMatrix& m) {
  oracle::Mat out(static_cast<std::size_t>(m.rows()), std::vector<oracle::i64>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<oracle::i64>();
  }
  return out;
}

}  // namespace testing_support
