#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyopt/fuzzy_number.hpp"
#include "fuzzyopt/problems.hpp"

// JSON text formats. All parse functions throw ParseError on malformed or
// inconsistent input.
//
//   FuzzyNumber      {"alphas": [...], "lo": [...], "hi": [...]}
//   TriangularFuzzy  [left, peak, right]
//   ProblemSpec      {"kind": ..., "coefficients": [[l,p,u], ...],
//                     "params": {"Va": v | [l,p,u], "rho": v | [l,p,u]},
//                     "domain": [lo|null, hi|null], "sense": ...,
//                     "x0": ..., "eps": ..., "max_iter": ...,
//                     "alpha_points": ..., "quadrature": ..., "fd_step": ...}
//   Sweep            [{"Va": ..., "rho": ..., "x0": ...}, ...]  or  {"rows": [...]}

namespace fuzzyopt {

std::string to_json(const FuzzyNumber& a);
FuzzyNumber fuzzy_number_from_json(std::string_view text);

std::string to_json(const TriangularFuzzy& t);
TriangularFuzzy triangular_from_json(std::string_view text);

/// Parses "v" or "l,p,u" (the command-line spelling of a Param).
Param parse_param(std::string_view text);

/// Only keys relevant to spec.kind are written; x0 and solver settings
/// always are, so the record reproduces the run exactly.
std::string to_json(const ProblemSpec& spec, int indent = 2);
/// Missing keys take the defaults of builtin_spec(kind).
ProblemSpec problem_spec_from_json(std::string_view text);
ProblemSpec load_problem_spec(const std::filesystem::path& path);

struct SweepRow {
  MaxReturnParams params;
  std::optional<double> x0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Empty or whitespace-only text is an empty sweep.
std::vector<SweepRow> parse_sweep(std::string_view text);
std::vector<SweepRow> load_sweep(const std::filesystem::path& path);
std::string to_json(const std::vector<SweepRow>& rows, int indent = 2);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace fuzzyopt
