#include "sforge/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <limits>
#include <sstream>

#include "sforge/discriminant.hpp"
#include "sforge/equations.hpp"
#include "sforge/invariants.hpp"
#include "sforge/splice.hpp"

namespace sforge {

using Json = nlohmann::ordered_json;

std::string tool_version() { return SFORGE_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

namespace {

// JSON helpers -------------------------------------------------------------------

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json character_json(const Character& c) {
  Json out = Json::array();
  for (const auto& phase : c) out.push_back(rational_json(phase));
  return out;
}

Json monomial_json(const Exponents& e, const std::vector<std::string>& vars) {
  Json out = Json::object();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) out[vars[i]] = e[i];
  }
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json header(const std::string& command, const ReportOptions& options) {
  Json h;
  h["tool"] = "sforge";
  h["version"] = tool_version();
  h["command"] = command;
  h["input"] = {{"path", options.input_path}, {"sha256", sha256_hex(options.input_text)}};
  return h;
}

std::string text_header(const std::string& command, const ReportOptions& options) {
  return "sforge " + tool_version() + " " + command + " " + options.input_path + "\n";
}

Json graph_json(const ResolutionGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    vertices.push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.vertex(a).id, g.vertex(b).id});
  return {{"vertices", vertices}, {"edges", edges}};
}

template <typename Vec, typename F>
Json cycle_json(const ResolutionGraph& g, const Vec& v, F convert) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i) out[g.vertex(i).id] = convert(v(static_cast<Eigen::Index>(i)));
  return out;
}

template <typename Vec>
std::string cycle_text(const ResolutionGraph& g, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += g.vertex(i).id + "=" + to_string(v(static_cast<Eigen::Index>(i)));
  }
  return out;
}

std::string optional_text(const std::optional<Integer>& x) { return x ? to_string(*x) : "-"; }

Json classification_json(const Classification& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  out["zsq"] = integer_json(c.zsq);
  out["multiplicity"] = c.multiplicity ? integer_json(*c.multiplicity) : Json();
  out["embedding_dimension"] = c.embedding_dimension ? integer_json(*c.embedding_dimension) : Json();
  return out;
}

std::string group_text(const std::vector<Integer>& factors) {
  if (factors.empty()) return "trivial";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + f.str();
  }
  return out;
}

Json characters_json(const CharacterAssignment& chars) {
  Json out = Json::object();
  for (std::size_t w = 0; w < chars.variables.size(); ++w) {
    out[chars.variables[w]] = character_json(chars.phases[w]);
  }
  return out;
}

std::string characters_text(const CharacterAssignment& chars) {
  std::ostringstream out;
  for (std::size_t w = 0; w < chars.variables.size(); ++w) {
    out << "  " << chars.variables[w] << ": " << character_to_string(chars.phases[w]) << '\n';
  }
  return out.str();
}

Json action_json(const DiscriminantData& data, const CharacterAssignment& chars) {
  Json factors = Json::array();
  for (const auto& f : data.invariant_factors) factors.push_back(integer_json(f));
  return {{"order", integer_json(data.order)},
          {"invariant_factors", factors},
          {"characters", characters_json(chars)}};
}

}  // namespace

// analyze ------------------------------------------------------------------------

Report analyze_report(const ResolutionGraph& g, const ReportOptions& options) {
  const IntMatrix m = intersection_matrix(g);
  if (!is_negative_definite(m)) {
    throw NotNegativeDefiniteError("intersection matrix is not negative definite");
  }
  const Integer det_abs = mp::abs(determinant(m));
  const Classification c = classify(g);

  Json result;
  result["graph"] = graph_json(g);
  result["intersection_matrix"] = matrix_json(m);
  result["negative_definite"] = true;
  result["determinant_abs"] = integer_json(det_abs);
  result["qhs_tree"] = g.is_qhs_tree();
  result["fundamental_cycle"] = cycle_json(g, c.fundamental_cycle, integer_json);
  result["canonical_cycle"] = cycle_json(g, c.canonical_cycle, rational_json);
  result["numerically_gorenstein"] = c.numerically_gorenstein;
  result["classification"] = classification_json(c);

  std::ostringstream text;
  text << text_header("analyze", options);
  text << "vertices: " << g.size() << "  edges: " << g.edges().size()
       << "  qhs tree: " << (g.is_qhs_tree() ? "yes" : "no") << '\n';
  text << "intersection matrix:\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    text << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) text << std::setw(4) << m(i, j).str();
    text << '\n';
  }
  text << "negative definite: yes   |det| = " << det_abs << '\n';
  text << "fundamental cycle: " << cycle_text(g, c.fundamental_cycle) << '\n';
  text << "canonical cycle:   " << cycle_text(g, c.canonical_cycle) << '\n';
  text << "numerically Gorenstein: " << (c.numerically_gorenstein ? "yes" : "no") << '\n';
  text << "classification: " << to_string(c.kind) << "  Z.Z = " << c.zsq
       << "  multiplicity = " << optional_text(c.multiplicity)
       << "  embedding dimension = " << optional_text(c.embedding_dimension) << '\n';

  // The minimally elliptic test is only meaningful on the minimal resolution,
  // so the blown-down graph is classified as well when it differs.
  Json blown = nullptr;
  if (g.is_tree()) {
    try {
      const ResolutionGraph reduced = blow_down_minimal(g);
      blown = Json::object();
      blown["vertex_count"] = reduced.size();
      const bool changed = reduced.size() != g.size();
      blown["changed"] = changed;
      if (reduced.empty()) {
        blown["classification"] = nullptr;
        blown["note"] = "smooth point";
        text << "blown down: smooth point\n";
      } else if (changed) {
        const Classification rc = classify(reduced);
        blown["graph"] = graph_json(reduced);
        blown["classification"] = classification_json(rc);
        text << "blown down (" << reduced.size() << " curves): " << to_string(rc.kind)
             << "  Z.Z = " << rc.zsq << '\n';
      } else {
        blown["classification"] = classification_json(c);
        text << "blown down: already minimal\n";
      }
    } catch (const NotMinimalRepresentableError& e) {
      blown = Json{{"error", e.what()}};
      text << "blown down: " << e.what() << '\n';
    }
  }
  result["blown_down"] = blown;

  if (g.is_qhs_tree()) {
    const DiscriminantData data = discriminant_group(g);
    const CharacterAssignment chars = leaf_characters(g, data);
    Json disc = action_json(data, chars);
    Json orders = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) orders[g.vertex(i).id] = integer_json(dual_class_order(g, i));
    disc["dual_class_orders"] = orders;
    result["discriminant"] = disc;
    text << "discriminant group: " << group_text(data.invariant_factors) << "  (order " << data.order << ")\n";
    if (!data.invariant_factors.empty()) text << "leaf characters:\n" << characters_text(chars);
  } else {
    result["discriminant"] = nullptr;
    text << "discriminant group: not computed (not a QHS tree)\n";
  }

  Report report;
  report.structured = header("analyze", options);
  report.structured["result"] = std::move(result);
  report.text = text.str();
  return report;
}

// splice -------------------------------------------------------------------------

namespace {

Json splice_json(const SpliceDiagram& d) {
  Json nodes = Json::array();
  Json weights = Json::object();
  for (std::size_t v : d.nodes()) {
    nodes.push_back({{"id", d.vertex(v).name}, {"node_weight", integer_json(node_weight(d, v))}});
    Json around = Json::object();
    for (std::size_t e : d.edges_at(v)) around[d.vertex(d.other_end(e, v)).name] = integer_json(d.weight(v, e));
    weights[d.vertex(v).name] = around;
  }
  Json edges = Json::array();
  Json dets = Json::array();
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edge(e);
    Json interior = Json::array();
    for (std::size_t idx : edge.interior) interior.push_back(idx);
    Json entry = {{"a", d.vertex(edge.a).name},
                  {"b", d.vertex(edge.b).name},
                  {"weight_a", edge.weight_a ? integer_json(*edge.weight_a) : Json()},
                  {"weight_b", edge.weight_b ? integer_json(*edge.weight_b) : Json()},
                  {"chain_length", edge.interior.size()}};
    edges.push_back(std::move(entry));
    if (d.vertex(edge.a).is_node && d.vertex(edge.b).is_node) {
      dets.push_back({{"a", d.vertex(edge.a).name},
                      {"b", d.vertex(edge.b).name},
                      {"determinant", integer_json(edge_determinant(d, e))}});
    }
  }
  Json leaves = Json::array();
  for (const auto& name : d.leaf_names()) leaves.push_back(name);
  return {{"nodes", nodes}, {"leaves", leaves}, {"edges", edges}, {"weights", weights}, {"edge_determinants", dets}};
}

}  // namespace

Report splice_report(const ResolutionGraph& g, const ReportOptions& options) {
  const SpliceDiagram d = to_splice_diagram(g);
  Json result = splice_json(d);
  std::ostringstream text;
  text << text_header("splice", options);
  text << render_splice_diagram(d);

  const bool zhs = is_zhs(g);
  result["zhs"] = zhs;
  if (d.has_nodes()) {
    const ZhsConditions cond = check_zhs_conditions(d);
    result["zhs_conditions"] = {{"pairwise_coprime", cond.pairwise_coprime},
                                {"leaf_weights_exceed_one", cond.leaf_weights_exceed_one},
                                {"edge_determinants_positive", cond.edge_determinants_positive}};
    text << "integral homology sphere: " << (zhs ? "yes" : "no") << "  (pairwise coprime: "
         << (cond.pairwise_coprime ? "yes" : "no")
         << ", leaf weights > 1: " << (cond.leaf_weights_exceed_one ? "yes" : "no")
         << ", edge determinants > 0: " << (cond.edge_determinants_positive ? "yes" : "no") << ")\n";
    result["notice"] = nullptr;
  } else {
    result["zhs_conditions"] = nullptr;
    result["notice"] = "no nodes: cyclic quotient case";
    text << "integral homology sphere: " << (zhs ? "yes" : "no") << '\n';
  }

  Report report;
  report.structured = header("splice", options);
  report.structured["result"] = std::move(result);
  report.text = text.str();
  return report;
}

// conditions ---------------------------------------------------------------------

Report conditions_report(const ResolutionGraph& g, const ReportOptions& options) {
  const SpliceDiagram d = to_splice_diagram(g);
  const auto leaves = d.leaf_names();
  Json result;
  std::ostringstream text;
  text << text_header("conditions", options);

  if (!d.has_nodes()) {
    result["notice"] = "no nodes: cyclic quotient case";
    result["semigroup"] = nullptr;
    result["congruence"] = nullptr;
    text << "no nodes: cyclic quotient case; conditions do not apply\n";
  } else {
    const SemigroupResult sg = semigroup_condition(d);
    Json directions = Json::array();
    text << "semigroup condition: " << (sg.holds ? "holds" : "FAILS") << '\n';
    for (const auto& w : sg.directions) {
      Json linking = Json::object();
      for (std::size_t k = 0; k < w.leaves.size(); ++k) linking[leaves[w.leaves[k]]] = integer_json(w.linking[k]);
      Json monomials = Json::array();
      std::string listed;
      for (const auto& alpha : w.solutions) {
        monomials.push_back(monomial_json(alpha, leaves));
        listed += (listed.empty() ? "" : ", ") + monomial_to_string(alpha, leaves);
      }
      directions.push_back({{"node", d.vertex(w.node).name},
                            {"toward", d.vertex(d.other_end(w.edge, w.node)).name},
                            {"node_weight", integer_json(w.node_weight)},
                            {"linking", linking},
                            {"monomials", monomials},
                            {"truncated", w.truncated}});
      text << "  " << d.direction_label(w.node, w.edge) << "  d=" << w.node_weight << ": "
           << (listed.empty() ? "(none)" : listed) << (w.truncated ? " ..." : "") << '\n';
    }
    Json failing = Json::array();
    for (std::size_t k : sg.failing) {
      const auto& w = sg.directions[k];
      failing.push_back({{"node", d.vertex(w.node).name}, {"toward", d.vertex(d.other_end(w.edge, w.node)).name}});
    }
    result["semigroup"] = {{"holds", sg.holds}, {"directions", directions}, {"failing", failing}};

    if (sg.holds) {
      const DiscriminantData data = discriminant_group(g);
      const CharacterAssignment chars = leaf_characters(g, data);
      const CongruenceResult cc = congruence_condition(d, sg, chars);
      Json nodes = Json::array();
      Json cfail = Json::array();
      text << "congruence condition: " << (cc.holds ? "holds" : "FAILS") << "  (group "
           << group_text(data.invariant_factors) << ")\n";
      for (std::size_t k = 0; k < cc.nodes.size(); ++k) {
        const auto& choice = cc.nodes[k];
        Json monomials = Json::array();
        std::string listed;
        for (const auto& alpha : choice.monomials) {
          monomials.push_back(monomial_json(alpha, leaves));
          listed += (listed.empty() ? "" : ", ") + monomial_to_string(alpha, leaves);
        }
        Json attained = Json::object();
        for (std::size_t i = 0; i < choice.edges.size(); ++i) {
          Json list = Json::array();
          for (const auto& chi : choice.attained[i]) list.push_back(character_json(chi));
          attained[d.vertex(d.other_end(choice.edges[i], choice.node)).name] = list;
        }
        nodes.push_back({{"node", d.vertex(choice.node).name},
                         {"character", choice.character ? character_json(*choice.character) : Json()},
                         {"monomials", monomials},
                         {"attained", attained}});
        text << "  node " << d.vertex(choice.node).name << ": ";
        if (choice.character) {
          text << "character " << character_to_string(*choice.character) << "  monomials " << listed << '\n';
        } else {
          text << "no common character\n";
          cfail.push_back(d.vertex(choice.node).name);
        }
      }
      result["congruence"] = {{"holds", cc.holds}, {"group_order", integer_json(data.order)},
                              {"nodes", nodes}, {"failing", cfail}};
    } else {
      result["congruence"] = nullptr;
      text << "congruence condition: not evaluated (semigroup condition fails)\n";
    }
  }

  Report report;
  report.structured = header("conditions", options);
  report.structured["result"] = std::move(result);
  report.text = text.str();
  return report;
}

// equations ----------------------------------------------------------------------

Report equations_report(const ResolutionGraph& g, const ReportOptions& options) {
  const EquationsPackage pkg = build_splice_equations(g);
  const DiscriminantData data = discriminant_group(g);

  Json vars = Json::array();
  for (const auto& v : pkg.variables) vars.push_back(v);
  Json equations = Json::array();
  std::ostringstream text;
  text << text_header("equations", options);
  text << "variables: ";
  for (std::size_t i = 0; i < pkg.variables.size(); ++i) text << (i ? ", " : "") << pkg.variables[i];
  text << '\n';

  for (const auto& node : pkg.nodes) {
    Json weights = Json::object();
    for (std::size_t w = 0; w < pkg.variables.size(); ++w) weights[pkg.variables[w]] = integer_json(node.variable_weights[w]);
    Json monomials = Json::array();
    for (const auto& alpha : node.monomials) monomials.push_back(monomial_json(alpha, pkg.variables));
    Json polys = Json::array();
    for (const auto& eq : node.equations) polys.push_back(eq.to_string());
    equations.push_back({{"node", node.name},
                         {"weight", integer_json(node.weight)},
                         {"variable_weights", weights},
                         {"monomials", monomials},
                         {"coefficients", matrix_json(node.coefficients)},
                         {"character", character_json(node.character)},
                         {"polynomials", polys}});
    text << "node " << node.name << "  weight " << node.weight << "  character "
         << character_to_string(node.character) << '\n';
    for (const auto& eq : node.equations) text << "  " << eq.to_string() << " = 0\n";
  }
  text << "action on the variables (group " << group_text(data.invariant_factors) << "):\n";
  text << (data.invariant_factors.empty() ? "  trivial\n" : characters_text(pkg.characters));

  Json result;
  result["variables"] = vars;
  result["equations"] = equations;
  result["action"] = action_json(data, pkg.characters);

  Report report;
  report.structured = header("equations", options);
  report.structured["result"] = std::move(result);
  report.text = text.str();
  return report;
}

// invariants ---------------------------------------------------------------------

Report invariants_report(const ResolutionGraph& g, const ReportOptions& options) {
  const DiscriminantData data = discriminant_group(g);
  const CharacterAssignment chars = leaf_characters(g, data);
  const InvariantBasis basis = invariant_generators(chars, data.order);
  const auto relations = toric_relations(basis, options.degree_bound);

  std::ostringstream text;
  text << text_header("invariants", options);
  text << "group: " << group_text(data.invariant_factors) << "  (order " << data.order << ")\n";
  text << "invariant generators:\n";
  Json gens = Json::array();
  for (std::size_t i = 0; i < basis.generators.size(); ++i) {
    const std::string mono = monomial_to_string(basis.generators[i], basis.variables);
    gens.push_back({{"name", basis.names[i]},
                    {"monomial", monomial_json(basis.generators[i], basis.variables)},
                    {"text", mono}});
    text << "  " << basis.names[i] << " = " << mono << '\n';
  }
  text << "toric relations up to degree " << options.degree_bound << ":";
  text << (relations.empty() ? " none\n" : "\n");
  Json rels = Json::array();
  for (const auto& r : relations) {
    const auto& lead = r.terms().rbegin()->first;
    const auto& trail = r.terms().begin()->first;
    rels.push_back({{"lead", monomial_json(lead, basis.names)},
                    {"trail", monomial_json(trail, basis.names)},
                    {"text", r.to_string()}});
    text << "  " << r.to_string() << " = 0\n";
  }

  Json result;
  result["group_order"] = integer_json(data.order);
  result["generators"] = gens;
  result["relations"] = rels;
  result["degree_bound"] = options.degree_bound;

  if (options.identity) {
    const EquationsPackage pkg = build_splice_equations(g);
    const Polynomial target_in_generators = parse_polynomial(*options.identity, basis.names);
    const auto images = basis.images();
    const Polynomial target = target_in_generators.substitute(images);
    const auto ideal = pkg.equations();
    const unsigned bound = options.cofactor_bound.value_or(options.degree_bound);
    const auto cert = membership_bounded(target, ideal, bound);

    Json ideal_json = Json::array();
    for (const auto& eq : ideal) ideal_json.push_back(eq.to_string());
    Json certificate = {{"target", target_in_generators.to_string()},
                        {"target_expanded", target.to_string()},
                        {"ideal", ideal_json},
                        {"degree_bound", bound},
                        {"found", cert.has_value()}};
    text << "identity " << target_in_generators.to_string() << "\n  expands to " << target.to_string() << '\n';
    if (cert) {
      Json cofactors = Json::array();
      for (const auto& q : cert->cofactors) cofactors.push_back(q.to_string());
      certificate["cofactors"] = cofactors;
      certificate["verified"] = verify_certificate(target, ideal, *cert);
      text << "  lies in the ideal of the splice equations:\n";
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        text << "    (" << cert->cofactors[i].to_string() << ") * (" << ideal[i].to_string() << ")\n";
      }
    } else {
      certificate["cofactors"] = nullptr;
      certificate["verified"] = false;
      text << "  no certificate with cofactors of degree <= " << bound
           << " (this does not prove non-membership)\n";
    }
    result["certificate"] = certificate;
  } else {
    result["certificate"] = nullptr;
  }

  Report report;
  report.structured = header("invariants", options);
  report.structured["result"] = std::move(result);
  report.text = text.str();
  return report;
}

}  // namespace sforge
