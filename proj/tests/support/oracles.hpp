#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace fuzzyopt::oracle {

struct Range {
  double lo;
  double hi;
};

// Extremes of op(s, t) over a dense sample of [a.lo, a.hi] x [b.lo, b.hi]
// (endpoints included).
inline Range sampled_image(Range a, Range b, const std::function<double(double, double)>& op,
                           int n = 24) {
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i <= n; ++i) {
    const double s = a.lo + (a.hi - a.lo) * i / n;
    for (int j = 0; j <= n; ++j) {
      const double t = b.lo + (b.hi - b.lo) * j / n;
      const double v = op(s, t);
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  }
  return r;
}

// Image of t -> t^2 over a dense sample of [a.lo, a.hi], plus 0 when it
// lies inside.
inline Range sampled_square(Range a, int n = 400) {
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i <= n; ++i) {
    const double t = a.lo + (a.hi - a.lo) * i / n;
    r.lo = std::min(r.lo, t * t);
    r.hi = std::max(r.hi, t * t);
  }
  if (a.lo <= 0.0 && 0.0 <= a.hi) r.lo = 0.0;
  return r;
}

// Cubic objective of the fuzzy polynomial (0,1,2) x^3 + (1,2,3) x^2 after
// integrating both level endpoints over alpha.
inline double cubic_F(double x) { return 2.0 * x * x * x + 4.0 * x * x; }
inline double cubic_dF(double x) { return 6.0 * x * x + 8.0 * x; }
inline double cubic_d2F(double x) { return 12.0 * x + 8.0; }

inline std::vector<double> cubic_newton_sequence(double x0, int steps) {
  std::vector<double> xs{x0};
  for (int k = 0; k < steps; ++k) {
    const double x = xs.back();
    xs.push_back(x - cubic_dF(x) / cubic_d2F(x));
  }
  return xs;
}

inline double max_return_g(double x, double Va, double rho) {
  const double c = 0.1256 * x * x - 0.1589 * x + 0.05139;
  return -0.06667 * x - 1.1167 + rho / (Va * Va) * (c - Va) * (c - Va);
}

// Simpson weights on an odd uniform grid over [0, 1], written out.
inline std::vector<double> simpson_weights(int m) {
  std::vector<double> w(m);
  const double h = 1.0 / (m - 1);
  for (int i = 0; i < m; ++i) w[i] = (i == 0 || i == m - 1 ? 1.0 : (i % 2 ? 4.0 : 2.0)) * h / 3.0;
  return w;
}

// Scalarized fuzzy max-return objective, level by level: the penalty
// interval is the product of [rho_lo/Va_hi^2, rho_hi/Va_lo^2] with the
// squared residual range, found here by brute force over the residual
// endpoints and zero.
inline double max_return_fuzzy_F(double x, const double va[3], const double rho[3], int m = 101) {
  const double c = 0.1256 * x * x - 0.1589 * x + 0.05139;
  const double lin = -0.06667 * x - 1.1167;
  const auto w = simpson_weights(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double a = static_cast<double>(i) / (m - 1);
    const double v_lo = va[0] + a * (va[1] - va[0]);
    const double v_hi = va[2] - a * (va[2] - va[1]);
    const double p_lo = rho[0] + a * (rho[1] - rho[0]);
    const double p_hi = rho[2] - a * (rho[2] - rho[1]);
    const double r0 = c - v_hi;
    const double r1 = c - v_lo;
    double s_lo = std::min(r0 * r0, r1 * r1);
    const double s_hi = std::max(r0 * r0, r1 * r1);
    if (r0 < 0.0 && r1 > 0.0) s_lo = 0.0;
    const double k_lo = p_lo / (v_hi * v_hi);
    const double k_hi = p_hi / (v_lo * v_lo);
    total += w[i] * (2.0 * lin + k_lo * s_lo + k_hi * s_hi);
  }
  return total;
}

// Centroid of a triangular membership function, from the geometry of the
// triangle.
inline double triangle_centroid(double l, double p, double u) { return (l + p + u) / 3.0; }

// Centroid int x mu(x) dx / int mu(x) dx by a fine midpoint rule over the
// support.
inline double membership_centroid(const std::function<double(double)>& mu, double lo, double hi,
                                  int n = 200000) {
  const double h = (hi - lo) / n;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (i + 0.5) * h;
    const double m = mu(x);
    num += x * m;
    den += m;
  }
  return num / den;
}

struct GridMin {
  double x;
  double value;
};

inline GridMin grid_argmin(const std::function<double(double)>& F, double lo, double hi,
                           double step) {
  GridMin best{lo, F(lo)};
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 0.5));
  for (long long i = 1; i <= n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = F(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

// Local minima of F on a uniform grid over [lo, hi] (interior points only).
inline std::vector<double> grid_local_minima(const std::function<double(double)>& F, double lo,
                                             double hi, double step) {
  std::vector<double> out;
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 0.5));
  double prev = F(lo);
  double cur = F(lo + step);
  for (long long i = 2; i <= n; ++i) {
    const double next = F(lo + static_cast<double>(i) * step);
    if (cur < prev && cur <= next) out.push_back(lo + static_cast<double>(i - 1) * step);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace fuzzyopt::oracle
