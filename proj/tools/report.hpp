#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyopt/newton.hpp"
#include "fuzzyopt/problems.hpp"

namespace fuzzyopt::cli {

enum class Format { text, csv, json };

std::optional<Format> parse_format(std::string_view name) noexcept;

/// Everything a `solve` run produced. `config` reproduces the run exactly.
struct RunReport {
  std::string problem;
  ProblemSpec config;
  SolveResult result;
  /// F(xstar) / 2: the alpha-averaged midpoint of the levels, which is the
  /// objective value itself for crisp problems.
  double objective = 0.0;
  /// Centroid of f(xstar).
  double centroid = 0.0;
  std::optional<VerificationReport> verification;
  double wall_time_s = 0.0;
};

/// One row of a `table` sweep.
struct TableRow {
  std::size_t index = 0;
  MaxReturnParams params;
  ProblemKind kind = ProblemKind::max_return_crisp;
  SolveResult result;
  /// Centroid of f(xstar); equals g(xstar) for crisp rows.
  double value = 0.0;
};

struct CheckReport {
  std::string problem;
  ProblemSpec config;
  VerificationReport verification;
};

void write_report(std::ostream& os, const RunReport& r, Format fmt);
void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format fmt);
void write_check(std::ostream& os, const CheckReport& r, Format fmt);

/// JSON documents, serialized with a fixed 2-space indent.
std::string report_json(const RunReport& r);
std::string table_json(const std::vector<TableRow>& rows);
std::string check_json(const CheckReport& r);

/// Re-emits a JSON document in the same canonical layout. A report passed
/// through this comes back byte-identical.
std::string canonicalize_json(std::string_view text);

/// %.6g, the precision used by text tables.
std::string format_sig6(double v);
/// %.17g, lossless for doubles.
std::string format_full(double v);

}  // namespace fuzzyopt::cli
