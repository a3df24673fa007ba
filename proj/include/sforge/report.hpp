#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sforge/graph.hpp"

namespace sforge {

/// One command's output: the structured document and its text rendering,
/// both produced from the same computed values.
struct Report {
  nlohmann::ordered_json structured;
  std::string text;
};

struct ReportOptions {
  std::string input_path;
  std::string input_text;  ///< raw file bytes, hashed into the report header
  unsigned degree_bound = 2;
  /// Polynomial in the invariant generator names to certify against the
  /// splice equations; cofactors are searched up to cofactor_bound
  /// (degree_bound when unset).
  std::optional<std::string> identity;
  std::optional<unsigned> cofactor_bound;
};

std::string tool_version();
std::string sha256_hex(const std::string& bytes);

Report analyze_report(const ResolutionGraph& g, const ReportOptions& options);
Report splice_report(const ResolutionGraph& g, const ReportOptions& options);
Report conditions_report(const ResolutionGraph& g, const ReportOptions& options);
Report equations_report(const ResolutionGraph& g, const ReportOptions& options);
Report invariants_report(const ResolutionGraph& g, const ReportOptions& options);

}  // namespace sforge
