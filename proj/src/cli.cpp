#include "sforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "sforge/error.hpp"
#include "sforge/report.hpp"

namespace sforge {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

using ReportFn = std::function<Report(const ResolutionGraph&, const ReportOptions&)>;

const std::map<std::string, std::pair<ReportFn, std::string>>& commands() {
  static const std::map<std::string, std::pair<ReportFn, std::string>> table = {
      {"analyze", {analyze_report, "matrix, definiteness, cycles, classification, discriminant group"}},
      {"splice", {splice_report, "splice diagram, edge determinants, integral homology sphere test"}},
      {"conditions", {conditions_report, "semigroup and congruence conditions with witnesses"}},
      {"equations", {equations_report, "splice-type equations and the group action on the variables"}},
      {"invariants", {invariants_report, "invariant monomials, toric relations, membership certificate"}},
  };
  return table;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sforge: splice-quotient data from resolution graphs", "sforge"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  unsigned degree_bound = 2;
  std::string identity_path;
  std::optional<unsigned> cofactor_bound;

  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("file", path, "resolution graph file")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    if (name == "invariants") {
      sub->add_option("--degree-bound", degree_bound, "degree bound for toric relations")
          ->check(CLI::Range(1u, 64u))
          ->capture_default_str();
      sub->add_option("--verify-identity", identity_path,
                      "file holding a polynomial in the generator names to certify");
      sub->add_option("--cofactor-bound", cofactor_bound,
                      "cofactor degree bound for the certificate (default: degree bound)")
          ->check(CLI::Range(0u, 64u));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto text = read_file(path);
    if (!text) {
      err << "sforge: cannot read " << path << '\n';
      return kExitInputError;
    }
    ReportOptions options;
    options.input_path = path;
    options.input_text = *text;
    options.degree_bound = degree_bound;
    options.cofactor_bound = cofactor_bound;
    if (!identity_path.empty()) {
      const auto identity = read_file(identity_path);
      if (!identity) {
        err << "sforge: cannot read " << identity_path << '\n';
        return kExitInputError;
      }
      options.identity = *identity;
    }

    const ResolutionGraph graph = parse_graph(*text);
    const Report report = commands().at(command).first(graph, options);
    if (format == "structured") {
      out << report.structured.dump(2) << '\n';
    } else {
      out << report.text;
    }
    return kExitSuccess;
  } catch (const InputError& e) {
    err << "sforge: " << path << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const EquationsRefusal& e) {
    err << "sforge: " << command << ": refused: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "sforge: " << command << ": " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace sforge
