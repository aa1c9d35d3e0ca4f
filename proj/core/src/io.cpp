#include "fuzzyopt/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fuzzyopt/errors.hpp"
#include "json.hpp"

namespace fuzzyopt {

using json = nlohmann::ordered_json;

namespace {

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

double number(const json& j, const char* field) {
  if (!j.is_number()) fail(std::string("'") + field + "' must be a number");
  return j.get<double>();
}

std::size_t count(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(std::string("'") + field + "' must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

json triangle_json(const TriangularFuzzy& t) { return json::array({t.left(), t.peak(), t.right()}); }

TriangularFuzzy triangle_from(const json& j) {
  if (!j.is_array() || j.size() != 3) fail("triangular fuzzy number must be [left, peak, right]");
  try {
    return TriangularFuzzy(number(j[0], "left"), number(j[1], "peak"), number(j[2], "right"));
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

json param_json(const Param& p) {
  if (const auto* d = std::get_if<double>(&p)) return *d;
  return triangle_json(std::get<TriangularFuzzy>(p));
}

Param param_from(const json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array()) return triangle_from(j);
  fail(std::string("'") + field + "' must be a number or [left, peak, right]");
}

json bound_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double bound_from(const json& j, double unbounded) {
  if (j.is_null()) return unbounded;
  return number(j, "domain");
}

SweepRow row_from(const json& j) {
  if (!j.is_object()) fail("sweep row must be an object");
  SweepRow row;
  for (const auto& [key, value] : j.items()) {
    if (key == "Va") {
      row.params.Va = param_from(value, "Va");
    } else if (key == "rho") {
      row.params.rho = param_from(value, "rho");
    } else if (key == "x0") {
      row.x0 = number(value, "x0");
    } else {
      fail("unknown sweep row key '" + key + "'");
    }
  }
  if (!j.contains("Va") || !j.contains("rho")) fail("sweep row needs both 'Va' and 'rho'");
  return row;
}

}  // namespace

std::string to_json(const FuzzyNumber& a) {
  json lo = json::array();
  json hi = json::array();
  for (const auto& l : a.levels()) {
    lo.push_back(l.lo);
    hi.push_back(l.hi);
  }
  json j;
  j["alphas"] = a.alphas();
  j["lo"] = std::move(lo);
  j["hi"] = std::move(hi);
  return j.dump();
}

FuzzyNumber fuzzy_number_from_json(std::string_view text) {
  const json j = parse_document(text, "fuzzy number");
  if (!j.is_object() || !j.contains("alphas") || !j.contains("lo") || !j.contains("hi")) {
    fail("fuzzy number must be {alphas, lo, hi}");
  }
  const json& alphas = j["alphas"];
  const json& lo = j["lo"];
  const json& hi = j["hi"];
  if (!alphas.is_array() || !lo.is_array() || !hi.is_array()) fail("alphas, lo, hi must be arrays");
  const std::size_t m = alphas.size();
  if (lo.size() != m || hi.size() != m) fail("alphas, lo and hi must have equal length");
  if (m < 2) fail("fuzzy number needs at least two levels");
  std::vector<Interval> levels(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(number(alphas[i], "alphas") - grid_alpha(i, m)) > 1e-12) {
      fail("alphas must form the uniform grid on [0, 1]");
    }
    levels[i] = {number(lo[i], "lo"), number(hi[i], "hi")};
  }
  try {
    return FuzzyNumber::from_levels(std::move(levels));
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

std::string to_json(const TriangularFuzzy& t) { return triangle_json(t).dump(); }

TriangularFuzzy triangular_from_json(std::string_view text) {
  return triangle_from(parse_document(text, "triangular fuzzy number"));
}

Param parse_param(std::string_view text) {
  std::vector<double> parts;
  std::string token;
  std::istringstream is{std::string(text)};
  while (std::getline(is, token, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      fail("cannot parse '" + std::string(text) + "' as a number or l,p,u triple");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos) {
      fail("trailing characters in '" + std::string(text) + "'");
    }
    parts.push_back(v);
  }
  if (parts.size() == 1) return parts[0];
  if (parts.size() == 3) {
    try {
      return TriangularFuzzy(parts[0], parts[1], parts[2]);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  fail("expected a number or an l,p,u triple, got '" + std::string(text) + "'");
}

std::string to_json(const ProblemSpec& spec, int indent) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  if (spec.kind == ProblemKind::fuzzy_polynomial) {
    json coeffs = json::array();
    for (const auto& c : spec.coefficients) coeffs.push_back(triangle_json(c));
    j["coefficients"] = std::move(coeffs);
  }
  if (spec.kind == ProblemKind::max_return_crisp || spec.kind == ProblemKind::max_return_fuzzy) {
    j["params"] = {{"Va", param_json(spec.params.Va)}, {"rho", param_json(spec.params.rho)}};
  }
  j["domain"] = json::array({bound_json(spec.domain.lo), bound_json(spec.domain.hi)});
  j["sense"] = std::string(to_string(spec.sense));
  j["x0"] = spec.x0;
  j["eps"] = spec.eps;
  j["max_iter"] = spec.max_iter;
  j["alpha_points"] = spec.alpha_points;
  j["quadrature"] = std::string(to_string(spec.quadrature));
  j["fd_step"] = spec.fd_step;
  return j.dump(indent);
}

ProblemSpec problem_spec_from_json(std::string_view text) {
  const json j = parse_document(text, "problem config");
  if (!j.is_object()) fail("problem config must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail("problem config needs a string 'kind'");
  const auto kind = parse_problem_kind(j["kind"].get<std::string>());
  if (!kind) fail("unknown problem kind '" + j["kind"].get<std::string>() + "'");

  ProblemSpec spec = builtin_spec(*kind);
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (key == "coefficients") {
      if (!value.is_array()) fail("'coefficients' must be an array of numbers or triples");
      spec.coefficients.clear();
      for (const auto& c : value) spec.coefficients.push_back(as_triangular(param_from(c, "coefficients")));
    } else if (key == "params") {
      if (!value.is_object()) fail("'params' must be an object");
      for (const auto& [pk, pv] : value.items()) {
        if (pk == "Va") {
          spec.params.Va = param_from(pv, "Va");
        } else if (pk == "rho") {
          spec.params.rho = param_from(pv, "rho");
        } else {
          fail("unknown params key '" + pk + "'");
        }
      }
    } else if (key == "domain") {
      if (!value.is_array() || value.size() != 2) fail("'domain' must be [lo, hi]");
      spec.domain.lo = bound_from(value[0], -std::numeric_limits<double>::infinity());
      spec.domain.hi = bound_from(value[1], std::numeric_limits<double>::infinity());
    } else if (key == "sense") {
      const auto s = value.is_string() ? parse_sense(value.get<std::string>()) : std::nullopt;
      if (!s) fail("'sense' must be \"minimize\" or \"maximize\"");
      spec.sense = *s;
    } else if (key == "x0") {
      spec.x0 = number(value, "x0");
    } else if (key == "eps") {
      spec.eps = number(value, "eps");
    } else if (key == "max_iter") {
      spec.max_iter = count(value, "max_iter");
    } else if (key == "alpha_points") {
      spec.alpha_points = count(value, "alpha_points");
    } else if (key == "quadrature") {
      const auto q = value.is_string() ? parse_quadrature_rule(value.get<std::string>()) : std::nullopt;
      if (!q) fail("'quadrature' must be \"trapezoid\" or \"simpson\"");
      spec.quadrature = *q;
    } else if (key == "fd_step") {
      spec.fd_step = number(value, "fd_step");
    } else {
      fail("unknown problem config key '" + key + "'");
    }
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    fail(std::string("invalid problem config: ") + e.what());
  }
  return spec;
}

ProblemSpec load_problem_spec(const std::filesystem::path& path) {
  return problem_spec_from_json(read_text_file(path));
}

std::vector<SweepRow> parse_sweep(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  const json j = parse_document(text, "sweep");
  const json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows") || j.size() != 1) fail("sweep object must be {\"rows\": [...]}");
    rows = &j["rows"];
  }
  if (!rows->is_array()) fail("sweep must be an array of rows");
  std::vector<SweepRow> out;
  for (const auto& r : *rows) out.push_back(row_from(r));
  return out;
}

std::vector<SweepRow> load_sweep(const std::filesystem::path& path) {
  return parse_sweep(read_text_file(path));
}

std::string to_json(const std::vector<SweepRow>& rows, int indent) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["Va"] = param_json(r.params.Va);
    row["rho"] = param_json(r.params.rho);
    if (r.x0) row["x0"] = *r.x0;
    arr.push_back(std::move(row));
  }
  return arr.dump(indent);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fuzzyopt
