#include "sforge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace sforge {

namespace {

bool is_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& adjacency) {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key, std::size_t line) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("invalid value '" + std::string(text) + "' for " + std::string(key), line);
  }
  return value;
}

}  // namespace

std::vector<Edge> ResolutionGraph::sorted_edges() const {
  std::vector<Edge> out;
  for (auto [a, b] : edges_) out.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

ResolutionGraph::ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.id.empty()) throw InputError("vertex with empty id");
    if (!ids.emplace(v.id, i).second) throw InputError("duplicate vertex id '" + v.id + "'");
    if (v.weight >= 0) {
      throw InputError("vertex '" + v.id + "' has weight " + std::to_string(v.weight) +
                       "; weights must be <= -1");
    }
  }
  for (const auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size()) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("self-loop at vertex '" + vertices_[a].id + "'");
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  if (!is_connected(vertices_.size(), adjacency_)) throw InputError("graph is not connected");
}

std::optional<std::size_t> ResolutionGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

bool ResolutionGraph::is_tree() const noexcept {
  return !vertices_.empty() && edges_.size() + 1 == vertices_.size();
}

bool ResolutionGraph::is_qhs_tree() const noexcept {
  return is_tree() && std::all_of(vertices_.begin(), vertices_.end(),
                                  [](const Vertex& v) { return v.genus == 0; });
}

ResolutionGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<std::pair<std::string, std::string>> edge_names;
  std::vector<std::size_t> edge_lines;
  std::map<std::string, std::size_t, std::less<>> ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (words[0] == "vertex") {
      if (words.size() < 2) throw InputError("vertex needs an id", line_no);
      Vertex v;
      v.id = std::string(words[1]);
      if (v.id.find('=') != std::string::npos) throw InputError("vertex needs an id", line_no);
      bool have_weight = false;
      bool have_genus = false;
      for (std::size_t k = 2; k < words.size(); ++k) {
        const auto eq = words[k].find('=');
        if (eq == std::string_view::npos) {
          throw InputError("expected key=value, got '" + std::string(words[k]) + "'", line_no);
        }
        const auto key = words[k].substr(0, eq);
        const auto value = words[k].substr(eq + 1);
        if (key == "weight" && !have_weight) {
          v.weight = parse_number<std::int64_t>(value, key, line_no);
          have_weight = true;
        } else if (key == "genus" && !have_genus) {
          v.genus = parse_number<unsigned>(value, key, line_no);
          have_genus = true;
        } else {
          throw InputError("unexpected attribute '" + std::string(key) + "' (expected weight= or genus=)",
                           line_no);
        }
      }
      if (!have_weight) throw InputError("vertex '" + v.id + "' is missing weight=", line_no);
      if (v.weight >= 0) {
        throw InputError("vertex '" + v.id + "' has weight " + std::to_string(v.weight) +
                             "; weights must be <= -1",
                         line_no);
      }
      if (!ids.emplace(v.id, vertices.size()).second) {
        throw InputError("duplicate vertex id '" + v.id + "'", line_no);
      }
      vertices.push_back(std::move(v));
      vertex_lines.push_back(line_no);
    } else if (words[0] == "edge") {
      if (words.size() != 3) throw InputError("edge needs exactly two vertex ids", line_no);
      edge_names.emplace_back(words[1], words[2]);
      edge_lines.push_back(line_no);
    } else {
      throw InputError("unknown directive '" + std::string(words[0]) + "'", line_no);
    }
    if (end == text.size()) break;
  }

  if (vertices.empty()) throw InputError("graph has no vertices");

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < edge_names.size(); ++k) {
    const auto& [a, b] = edge_names[k];
    const auto ia = ids.find(a);
    if (ia == ids.end()) throw InputError("edge refers to undeclared vertex '" + a + "'", edge_lines[k]);
    const auto ib = ids.find(b);
    if (ib == ids.end()) throw InputError("edge refers to undeclared vertex '" + b + "'", edge_lines[k]);
    if (ia->second == ib->second) throw InputError("self-loop at vertex '" + a + "'", edge_lines[k]);
    edges.emplace_back(ia->second, ib->second);
  }
  return ResolutionGraph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const ResolutionGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "vertex " << v.id << " weight=" << v.weight;
    if (v.genus != 0) out << " genus=" << v.genus;
    out << '\n';
  }
  for (const auto& [a, b] : g.edges()) {
    out << "edge " << g.vertex(a).id << ' ' << g.vertex(b).id << '\n';
  }
  return out.str();
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = g.vertex(static_cast<std::size_t>(i)).weight;
  for (const auto& [a, b] : g.edges()) {
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += 1;
    m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) += 1;
  }
  return m;
}

std::vector<std::size_t> end_vertices(const ResolutionGraph& g) {
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.valency(i) <= 1) ends.push_back(i);
  }
  return ends;
}

void require_negative_definite(const ResolutionGraph& g) {
  if (g.empty()) throw NotNegativeDefiniteError("graph is empty");
  if (!is_negative_definite(intersection_matrix(g))) {
    throw NotNegativeDefiniteError("intersection matrix is not negative definite");
  }
}

void require_qhs_tree(const ResolutionGraph& g) {
  if (!g.is_tree()) throw NotQhsTreeError("not a QHS tree: graph has cycles");
  for (const auto& v : g.vertices()) {
    if (v.genus != 0) {
      throw NotQhsTreeError("not a QHS tree: vertex '" + v.id + "' has genus " +
                            std::to_string(v.genus));
    }
  }
  if (!is_negative_definite(intersection_matrix(g))) {
    throw NotQhsTreeError("not a QHS tree: intersection matrix is not negative definite");
  }
}

RatVector canonical_cycle(const ResolutionGraph& g) {
  require_negative_definite(g);
  const auto n = static_cast<Eigen::Index>(g.size());
  IntVector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& v = g.vertex(static_cast<std::size_t>(i));
    rhs(i) = Integer(2) * v.genus - 2 - v.weight;
  }
  return solve_rational(intersection_matrix(g), rhs);
}

bool is_numerically_gorenstein(const ResolutionGraph& g) {
  const RatVector k = canonical_cycle(g);
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    if (!is_integral(k(i))) return false;
  }
  return true;
}

IntVector fundamental_cycle(const ResolutionGraph& g) {
  require_negative_definite(g);
  const IntMatrix m = intersection_matrix(g);
  const Eigen::Index n = m.rows();
  IntVector z = IntVector::Ones(n);
  IntVector products = m * z;  // products(i) = Z.E_i
  for (;;) {
    Eigen::Index violating = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (products(i) > 0) {
        violating = i;
        break;
      }
    }
    if (violating < 0) return z;
    z(violating) += 1;
    products += m.col(violating);
  }
}

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::rational:
      return "rational";
    case SingularityKind::minimally_elliptic:
      return "minimally_elliptic";
    case SingularityKind::other:
      return "other";
  }
  return "other";
}

Classification classify(const ResolutionGraph& g) {
  Classification c;
  c.fundamental_cycle = fundamental_cycle(g);
  c.canonical_cycle = canonical_cycle(g);
  c.numerically_gorenstein = true;
  for (Eigen::Index i = 0; i < c.canonical_cycle.size(); ++i) {
    if (!is_integral(c.canonical_cycle(i))) c.numerically_gorenstein = false;
  }

  const IntMatrix m = intersection_matrix(g);
  const RatVector z = c.fundamental_cycle.cast<Rational>();
  c.zsq = pairing(c.fundamental_cycle, m, c.fundamental_cycle);
  const Rational z_dot_zk = pairing(z, m, RatVector(z + c.canonical_cycle));
  const Integer mult = -c.zsq;

  if (z_dot_zk == -2) {
    c.kind = SingularityKind::rational;
    c.multiplicity = mult;
    c.embedding_dimension = mult + 1;
  } else if (RatVector(z + c.canonical_cycle).isZero()) {
    c.kind = SingularityKind::minimally_elliptic;
    // m = 1, 2, 3: hypersurface of multiplicity 2, 2, 3 in C^3; m >= 4: multiplicity
    // m and Hilbert function mn, so embedding dimension m.
    if (mult >= 4) {
      c.multiplicity = mult;
      c.embedding_dimension = mult;
    } else {
      c.multiplicity = mult == 3 ? Integer(3) : Integer(2);
      c.embedding_dimension = 3;
    }
  }
  return c;
}

ResolutionGraph blow_down_minimal(const ResolutionGraph& g) {
  if (g.empty()) return g;
  if (!g.is_tree()) throw PreconditionError("blow_down_minimal: graph is not a tree");

  // Work on a mutable adjacency-set representation; `alive` marks surviving vertices.
  std::vector<Vertex> vertices = g.vertices();
  std::vector<bool> alive(vertices.size(), true);
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto drop = [&](std::vector<std::size_t>& list, std::size_t x) {
    list.erase(std::find(list.begin(), list.end(), x));
  };

  for (;;) {
    std::size_t pick = vertices.size();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (alive[i] && vertices[i].genus == 0 && vertices[i].weight == -1 && adj[i].size() <= 2) {
        pick = i;
        break;
      }
    }
    if (pick == vertices.size()) break;

    const std::vector<std::size_t> nbrs = adj[pick];
    for (std::size_t w : nbrs) {
      drop(adj[w], pick);
      vertices[w].weight += 1;
    }
    if (nbrs.size() == 2) {
      adj[nbrs[0]].push_back(nbrs[1]);
      adj[nbrs[1]].push_back(nbrs[0]);
    }
    adj[pick].clear();
    alive[pick] = false;

    for (std::size_t w : nbrs) {
      if (vertices[w].weight >= 0) {
        throw NotMinimalRepresentableError("blowing down '" + vertices[pick].id + "' leaves '" +
                                           vertices[w].id + "' with weight " +
                                           std::to_string(vertices[w].weight));
      }
    }
  }

  std::vector<std::size_t> new_index(vertices.size(), vertices.size());
  std::vector<Vertex> kept;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (alive[i]) {
      new_index[i] = kept.size();
      kept.push_back(vertices[i]);
    }
  }
  // Edges listed by their smaller endpoint in the original order.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!alive[i]) continue;
    std::vector<std::size_t> higher;
    for (std::size_t w : adj[i]) {
      if (w > i) higher.push_back(w);
    }
    std::sort(higher.begin(), higher.end());
    for (std::size_t w : higher) edges.emplace_back(new_index[i], new_index[w]);
  }
  return ResolutionGraph(std::move(kept), std::move(edges));
}

}  // namespace sforge
