#include "report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <iomanip>

#include "fuzzyopt/io.hpp"
#include "json.hpp"

namespace fuzzyopt::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// (0-level lo, 1-level midpoint, 0-level hi)
std::array<double, 3> support_triple(const FuzzyNumber& a) {
  return {a.support().lo, a.core().midpoint(), a.support().hi};
}

json triple_json(const FuzzyNumber& a) {
  const auto t = support_triple(a);
  return json::array({num(t[0]), num(t[1]), num(t[2])});
}

json param_json(const Param& p) {
  if (const auto* d = std::get_if<double>(&p)) return *d;
  const auto& t = std::get<TriangularFuzzy>(p);
  return json::array({t.left(), t.peak(), t.right()});
}

std::string param_text(const Param& p, std::string (*fmt)(double), char sep) {
  if (const auto* d = std::get_if<double>(&p)) return fmt(*d);
  const auto& t = std::get<TriangularFuzzy>(p);
  std::string s = "(";
  s += fmt(t.left());
  s += sep;
  s += fmt(t.peak());
  s += sep;
  s += fmt(t.right());
  s += ")";
  return s;
}

json trace_json(const SolveResult& r) {
  json trace = json::array();
  for (const auto& rec : r.trace) {
    json row;
    row["k"] = rec.k;
    row["x_k"] = num(rec.x_k);
    row["x_next"] = num(rec.x_next);
    row["F"] = num(rec.F);
    row["dF"] = num(rec.dF);
    row["d2F"] = num(rec.d2F);
    row["step"] = num(rec.step);
    row["fuzzy_value"] = triple_json(rec.fuzzy_value);
    trace.push_back(std::move(row));
  }
  return trace;
}

json result_json(const SolveResult& r) {
  json j;
  j["status"] = std::string(to_string(r.status));
  j["stationarity_kind"] = std::string(to_string(r.stationarity_kind));
  j["iterations"] = r.trace.size();
  j["xstar"] = num(r.xstar);
  j["F"] = num(r.F);
  j["dF"] = num(r.dF);
  j["d2F"] = num(r.d2F);
  j["trace"] = trace_json(r);
  return j;
}

json comparability_json(const ComparabilityVerdict& v) {
  json j;
  j["comparable"] = v.comparable;
  j["witness_lambda"] = v.witness_lambda ? num(*v.witness_lambda) : json(nullptr);
  j["samples"] = v.samples_checked;
  return j;
}

json verification_json(const VerificationReport& v) {
  json j;
  j["xstar"] = num(v.xstar);
  j["abs_dF"] = num(v.abs_dF);
  j["d2F"] = num(v.d2F);
  j["stationarity_tol"] = num(v.stationarity_tol);
  j["stationary"] = v.stationary;
  j["max_level_slope_lo"] = num(v.max_level_slope_lo);
  j["max_level_slope_hi"] = num(v.max_level_slope_hi);
  json nd;
  nd["verdict"] = v.non_dominance.dominated ? "dominated-by" : "no-dominator-found";
  nd["dominator"] = v.non_dominance.dominator ? num(*v.non_dominance.dominator) : json(nullptr);
  nd["samples"] = v.non_dominance.samples_checked;
  j["non_dominance"] = std::move(nd);
  j["comparable_forward"] = comparability_json(v.comparable_forward);
  j["comparable_backward"] = comparability_json(v.comparable_backward);
  j["passed"] = v.passed();
  return j;
}

void write_verification_text(std::ostream& os, const VerificationReport& v) {
  os << "stationarity: |F'(x*)| = " << format_sig6(v.abs_dF)
     << "  tol = " << format_sig6(v.stationarity_tol)
     << (v.stationary ? "  ok" : "  FAILED") << "\n";
  os << "level slopes at x*: max |f_lo'| = " << format_sig6(v.max_level_slope_lo)
     << "  max |f_hi'| = " << format_sig6(v.max_level_slope_hi) << "\n";
  os << "non-dominance: ";
  if (v.non_dominance.dominated) {
    os << "dominated-by x1 = " << format_sig6(*v.non_dominance.dominator);
  } else {
    os << "no-dominator-found";
  }
  os << " (" << v.non_dominance.samples_checked << " samples)\n";
  auto comp = [&os](const char* label, const ComparabilityVerdict& c) {
    os << "comparability " << label << ": " << (c.comparable ? "yes" : "no");
    if (c.witness_lambda) os << " (fails at lambda = " << format_sig6(*c.witness_lambda) << ")";
    os << " (" << c.samples_checked << " samples)\n";
  };
  comp("d=+1", v.comparable_forward);
  comp("d=-1", v.comparable_backward);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_json(const RunReport& r) {
  json j;
  j["command"] = "solve";
  j["problem"] = r.problem;
  j["config"] = json::parse(to_json(r.config));
  j["result"] = result_json(r.result);
  json summary;
  summary["xstar"] = num(r.result.xstar);
  summary["F"] = num(r.result.F);
  summary["objective"] = num(r.objective);
  summary["centroid"] = num(r.centroid);
  j["summary"] = std::move(summary);
  j["verification"] = r.verification ? verification_json(*r.verification) : json(nullptr);
  j["wall_time_s"] = r.wall_time_s;
  return j.dump(kIndent);
}

std::string table_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["index"] = row.index;
    j["kind"] = std::string(to_string(row.kind));
    j["Va"] = param_json(row.params.Va);
    j["rho"] = param_json(row.params.rho);
    j["status"] = std::string(to_string(row.result.status));
    j["iterations"] = row.result.trace.size();
    j["xstar"] = num(row.result.xstar);
    j["value"] = num(row.value);
    arr.push_back(std::move(j));
  }
  json doc;
  doc["command"] = "table";
  doc["rows"] = std::move(arr);
  return doc.dump(kIndent);
}

std::string check_json(const CheckReport& r) {
  json j;
  j["command"] = "check";
  j["problem"] = r.problem;
  j["config"] = json::parse(to_json(r.config));
  j["verification"] = verification_json(r.verification);
  return j.dump(kIndent);
}

std::string canonicalize_json(std::string_view text) {
  return json::parse(text.begin(), text.end()).dump(kIndent);
}

void write_report(std::ostream& os, const RunReport& r, Format fmt) {
  if (fmt == Format::json) {
    os << report_json(r) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    os << "k,x_k,x_next,F,dF,d2F,step,support_lo,core,support_hi\n";
    for (const auto& rec : r.result.trace) {
      const auto t = support_triple(rec.fuzzy_value);
      os << rec.k << ',' << format_full(rec.x_k) << ',' << format_full(rec.x_next) << ','
         << format_full(rec.F) << ',' << format_full(rec.dF) << ',' << format_full(rec.d2F)
         << ',' << format_full(rec.step) << ',' << format_full(t[0]) << ','
         << format_full(t[1]) << ',' << format_full(t[2]) << "\n";
    }
    os << "\nproblem,status,stationarity_kind,iterations,xstar,F,objective,centroid\n";
    os << r.problem << ',' << to_string(r.result.status) << ','
       << to_string(r.result.stationarity_kind) << ',' << r.result.trace.size() << ','
       << format_full(r.result.xstar) << ',' << format_full(r.result.F) << ','
       << format_full(r.objective) << ',' << format_full(r.centroid) << "\n";
    return;
  }

  os << "problem: " << r.problem << "\n";
  os << "config: " << json::parse(to_json(r.config)).dump() << "\n\n";
  os << std::setw(4) << "k" << std::setw(14) << "x(k)" << std::setw(14) << "x(k+1)"
     << "   f(x(k)) (support lo, core, support hi)\n";
  for (const auto& rec : r.result.trace) {
    const auto t = support_triple(rec.fuzzy_value);
    os << std::setw(4) << rec.k << std::setw(14) << format_sig6(rec.x_k) << std::setw(14)
       << format_sig6(rec.x_next) << "   (" << format_sig6(t[0]) << ", " << format_sig6(t[1])
       << ", " << format_sig6(t[2]) << ")\n";
  }
  os << "\nstatus: " << to_string(r.result.status) << " ("
     << to_string(r.result.stationarity_kind) << ") after " << r.result.trace.size()
     << " iterations\n";
  os << "x* = " << format_sig6(r.result.xstar) << "  F(x*) = " << format_sig6(r.result.F)
     << "  F(x*)/2 = " << format_sig6(r.objective)
     << "  centroid f(x*) = " << format_sig6(r.centroid) << "\n";
  if (r.verification) write_verification_text(os, *r.verification);
  os << "wall time: " << format_sig6(r.wall_time_s) << " s\n";
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format fmt) {
  if (fmt == Format::json) {
    os << table_json(rows) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    os << "index,kind,Va,rho,status,iterations,xstar,value\n";
    for (const auto& row : rows) {
      os << row.index << ',' << to_string(row.kind) << ','
         << param_text(row.params.Va, format_full, ';') << ','
         << param_text(row.params.rho, format_full, ';') << ','
         << to_string(row.result.status) << ',' << row.result.trace.size() << ','
         << format_full(row.result.xstar) << ',' << format_full(row.value) << "\n";
    }
    return;
  }
  os << std::left << std::setw(28) << "Va" << std::setw(20) << "rho" << std::setw(12) << "x*"
     << std::setw(12) << "value" << "status\n";
  for (const auto& row : rows) {
    os << std::setw(28) << param_text(row.params.Va, format_sig6, ',') << std::setw(20)
       << param_text(row.params.rho, format_sig6, ',') << std::setw(12)
       << format_sig6(row.result.xstar) << std::setw(12) << format_sig6(row.value)
       << to_string(row.result.status) << "\n";
  }
  os << std::right;
}

void write_check(std::ostream& os, const CheckReport& r, Format fmt) {
  const auto& v = r.verification;
  if (fmt == Format::json) {
    os << check_json(r) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    os << "problem,xstar,abs_dF,stationarity_tol,stationary,max_level_slope_lo,"
          "max_level_slope_hi,non_dominance,dominator,comparable_forward,comparable_backward,"
          "passed\n";
    os << r.problem << ',' << format_full(v.xstar) << ',' << format_full(v.abs_dF) << ','
       << format_full(v.stationarity_tol) << ',' << (v.stationary ? "true" : "false") << ','
       << format_full(v.max_level_slope_lo) << ',' << format_full(v.max_level_slope_hi) << ','
       << (v.non_dominance.dominated ? "dominated-by" : "no-dominator-found") << ','
       << (v.non_dominance.dominator ? format_full(*v.non_dominance.dominator) : "") << ','
       << (v.comparable_forward.comparable ? "true" : "false") << ','
       << (v.comparable_backward.comparable ? "true" : "false") << ','
       << (v.passed() ? "true" : "false") << "\n";
    return;
  }
  os << "problem: " << r.problem << "\n";
  os << "x* = " << format_sig6(v.xstar) << "\n";
  write_verification_text(os, v);
  os << "result: " << (v.passed() ? "passed" : "FAILED") << "\n";
}

}  // namespace fuzzyopt::cli
