// Writes seeded random negative-definite trees as graph files.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "sforge/random_tree.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sforge-randtree: seeded random negative-definite trees"};
  std::uint64_t seed = 20240101;
  std::size_t count = 12;
  std::size_t max_vertices = 10;
  std::string directory = "corpus/random";
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--count", count)->capture_default_str();
  app.add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 10))->capture_default_str();
  app.add_option("--out", directory)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(directory);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = sforge::random_negative_definite_tree(rng, max_vertices);
    char name[32];
    std::snprintf(name, sizeof name, "tree-%02zu.graph", i);
    const auto path = std::filesystem::path(directory) / name;
    std::ofstream out(path);
    out << "# random negative-definite tree, seed " << seed << ", index " << i << '\n';
    out << sforge::serialize_graph(g);
    std::cout << path.string() << '\n';
  }
  return 0;
}
