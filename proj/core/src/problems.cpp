#include "fuzzyopt/problems.hpp"

#include <cmath>
#include <sstream>

#include "fuzzyopt/errors.hpp"

namespace fuzzyopt {

namespace mr = max_return;

namespace {

double ipow(double x, std::size_t n) {
  double r = 1.0;
  for (std::size_t i = 0; i < n; ++i) r *= x;
  return r;
}

double risk_poly(double x) { return mr::kRiskQuadratic * x * x - mr::kRiskLinear * x + mr::kRiskConstant; }
double risk_poly_d1(double x) { return 2.0 * mr::kRiskQuadratic * x - mr::kRiskLinear; }
constexpr double kRiskPolyD2 = 2.0 * mr::kRiskQuadratic;

double linear_part(double x) { return -mr::kReturnSlope * x - mr::kReturnOffset; }

void require_positive(const TriangularFuzzy& t, const char* name) {
  if (!(t.left() > 0.0)) {
    std::ostringstream os;
    os << name << " must be strictly positive at every level, support starts at " << t.left();
    throw DomainError(os.str());
  }
}

}  // namespace

TriangularFuzzy as_triangular(const Param& p) {
  if (const auto* d = std::get_if<double>(&p)) return TriangularFuzzy::crisp(*d);
  return std::get<TriangularFuzzy>(p);
}

bool MaxReturnParams::is_crisp() const {
  return as_triangular(Va).is_crisp() && as_triangular(rho).is_crisp();
}

MaxReturnParams MaxReturnParams::fuzzy_defaults() {
  return {TriangularFuzzy(0.00167, 0.00168, 0.00172), TriangularFuzzy(0.5, 1.5, 3.5)};
}

std::string_view to_string(ProblemKind k) noexcept {
  switch (k) {
    case ProblemKind::example_4_1: return "example_4_1";
    case ProblemKind::max_return_crisp: return "max_return_crisp";
    case ProblemKind::max_return_fuzzy: return "max_return_fuzzy";
    case ProblemKind::fuzzy_polynomial: return "fuzzy_polynomial";
  }
  return "unknown";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) noexcept {
  for (auto k : {ProblemKind::example_4_1, ProblemKind::max_return_crisp,
                 ProblemKind::max_return_fuzzy, ProblemKind::fuzzy_polynomial}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Sense s) noexcept {
  return s == Sense::minimize ? "minimize" : "maximize";
}

std::optional<Sense> parse_sense(std::string_view name) noexcept {
  if (name == "minimize") return Sense::minimize;
  if (name == "maximize") return Sense::maximize;
  return std::nullopt;
}

void ProblemSpec::validate() const {
  switch (kind) {
    case ProblemKind::fuzzy_polynomial:
      if (coefficients.empty()) throw DomainError("fuzzy_polynomial needs at least one coefficient");
      break;
    case ProblemKind::max_return_crisp:
      if (!params.is_crisp()) {
        throw DomainError("max_return_crisp takes exact Va and rho; use max_return_fuzzy");
      }
      [[fallthrough]];
    case ProblemKind::max_return_fuzzy:
      require_positive(as_triangular(params.Va), "Va");
      require_positive(as_triangular(params.rho), "rho");
      break;
    case ProblemKind::example_4_1:
      break;
  }
  if (!(domain.lo <= domain.hi)) throw DomainError("domain lower bound exceeds upper bound");
  newton_config().validate();
}

NewtonConfig ProblemSpec::newton_config() const {
  NewtonConfig cfg;
  cfg.x0 = x0;
  cfg.eps = eps;
  cfg.max_iter = max_iter;
  cfg.scal.alpha_points = alpha_points;
  cfg.scal.quadrature = quadrature;
  cfg.scal.fd_step = fd_step;
  return cfg;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  return a.kind == b.kind && a.coefficients == b.coefficients && a.params == b.params &&
         a.domain.lo == b.domain.lo && a.domain.hi == b.domain.hi && a.sense == b.sense &&
         a.x0 == b.x0 && a.eps == b.eps && a.max_iter == b.max_iter &&
         a.alpha_points == b.alpha_points && a.quadrature == b.quadrature &&
         a.fd_step == b.fd_step;
}

ProblemSpec builtin_spec(ProblemKind kind) {
  ProblemSpec spec;
  spec.kind = kind;
  switch (kind) {
    case ProblemKind::example_4_1:
      spec.sense = Sense::maximize;
      break;
    case ProblemKind::max_return_crisp:
      spec.params = {mr::kDefaultVa, mr::kDefaultRho};
      break;
    case ProblemKind::max_return_fuzzy:
      spec.params = MaxReturnParams::fuzzy_defaults();
      spec.fd_step = mr::kFuzzyFdStep;
      break;
    case ProblemKind::fuzzy_polynomial:
      spec.coefficients = {TriangularFuzzy::crisp(0.0), TriangularFuzzy::crisp(0.0),
                           TriangularFuzzy(1, 2, 3), TriangularFuzzy(0, 1, 2)};
      break;
  }
  return spec;
}

FuzzyFunction build_fuzzy_polynomial(std::vector<TriangularFuzzy> coefficients, Domain domain) {
  if (coefficients.empty()) throw DomainError("fuzzy polynomial needs at least one coefficient");

  FuzzyFunction f;
  f.domain = domain;
  f.levels = [coefficients](double x, double alpha) {
    Interval sum{0.0, 0.0};
    double power = 1.0;
    for (const auto& c : coefficients) {
      sum = sum + scale(power, alpha_cut(c, alpha));
      power *= x;
    }
    return LevelPair{sum.lo, sum.hi};
  };

  // Each term's endpoints are c_lo * x^i or c_hi * x^i depending on the sign
  // of x^i, so derivatives follow the same endpoint selection.
  auto derivative = [coefficients](std::size_t order) {
    return [coefficients, order](double x, double alpha) {
      LevelPair sum;
      for (std::size_t i = order; i < coefficients.size(); ++i) {
        const Interval cut = alpha_cut(coefficients[i], alpha);
        const bool nonneg = ipow(x, i) >= 0.0;
        double factor = 1.0;
        for (std::size_t j = 0; j < order; ++j) factor *= static_cast<double>(i - j);
        const double dpow = factor * ipow(x, i - order);
        sum.lo += (nonneg ? cut.lo : cut.hi) * dpow;
        sum.hi += (nonneg ? cut.hi : cut.lo) * dpow;
      }
      return sum;
    };
  };
  f.first_derivative = derivative(1);
  f.second_derivative = derivative(2);
  return f;
}

FuzzyFunction build_example_4_1() {
  return build_fuzzy_polynomial({TriangularFuzzy::crisp(0.0), TriangularFuzzy::crisp(0.0),
                                 TriangularFuzzy(1, 2, 3), TriangularFuzzy(0, 1, 2)});
}

FuzzyFunction build_max_return_crisp(double Va, double rho) {
  if (!(Va > 0.0)) throw DomainError("Va must be positive");
  if (!(rho > 0.0)) throw DomainError("rho must be positive");
  const double k = rho / (Va * Va);
  auto g = [Va, k](double x) {
    const double r = risk_poly(x) - Va;
    return linear_part(x) + k * (r * r);
  };
  auto g1 = [Va, k](double x) {
    return -mr::kReturnSlope + 2.0 * k * (risk_poly(x) - Va) * risk_poly_d1(x);
  };
  auto g2 = [Va, k](double x) {
    const double c1 = risk_poly_d1(x);
    return 2.0 * k * (c1 * c1 + (risk_poly(x) - Va) * kRiskPolyD2);
  };
  return crisp_lift(g, g1, g2);
}

FuzzyFunction build_max_return_fuzzy(const TriangularFuzzy& Va, const TriangularFuzzy& rho) {
  if (Va.left() <= 0.0 && Va.right() >= 0.0) {
    throw SingularError("Va support contains zero", 0.0);
  }
  if (!(Va.left() > 0.0)) throw DomainError("Va must be positive");
  if (!(rho.left() > 0.0)) throw DomainError("rho must be positive");

  // Weight interval [rho_lo / Va_hi^2, rho_hi / Va_lo^2] and residual
  // interval at one (x, alpha).
  auto weight = [Va, rho](double alpha) {
    const Interval v = alpha_cut(Va, alpha);
    const Interval p = alpha_cut(rho, alpha);
    return Interval{p.lo / (v.hi * v.hi), p.hi / (v.lo * v.lo)};
  };
  auto residual = [Va](double x, double alpha) {
    const Interval v = alpha_cut(Va, alpha);
    const double c = risk_poly(x);
    return Interval{c - v.hi, c - v.lo};
  };

  FuzzyFunction f;
  f.levels = [weight, residual](double x, double alpha) {
    const Interval penalty = multiply(weight(alpha), square(residual(x, alpha)));
    const double lin = linear_part(x);
    return LevelPair{lin + penalty.lo, lin + penalty.hi};
  };
  return f;
}

FuzzyFunction build_function(const ProblemSpec& spec) {
  spec.validate();
  FuzzyFunction f;
  switch (spec.kind) {
    case ProblemKind::example_4_1:
      f = build_example_4_1();
      break;
    case ProblemKind::max_return_crisp:
      f = build_max_return_crisp(as_triangular(spec.params.Va).peak(),
                                 as_triangular(spec.params.rho).peak());
      break;
    case ProblemKind::max_return_fuzzy:
      f = build_max_return_fuzzy(as_triangular(spec.params.Va), as_triangular(spec.params.rho));
      break;
    case ProblemKind::fuzzy_polynomial:
      f = build_fuzzy_polynomial(spec.coefficients);
      break;
  }
  f.domain = spec.domain;
  return f;
}

std::optional<Interval> reference_bracket(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::example_4_1: return Interval{-0.5, 0.5};
    case ProblemKind::max_return_crisp:
    case ProblemKind::max_return_fuzzy: return Interval{0.0, 1.5};
    case ProblemKind::fuzzy_polynomial: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fuzzyopt
