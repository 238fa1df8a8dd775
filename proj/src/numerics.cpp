#include "dsrlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace dsrlab {

namespace {

// G7/K15 nodes and weights (positive half; node 0 listed last).
constexpr int kNumNodes = 8;
constexpr double kNodes[kNumNodes] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWeightsK[kNumNodes] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (and the center).
constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double gauss = 0.0;
  double kronrod = 0.0;
  for (int i = 0; i < kNumNodes; ++i) {
    const double dx = half * kNodes[i];
    double fsum = f(mid + dx);
    if (kNodes[i] != 0.0) fsum += f(mid - dx);
    kronrod += kWeightsK[i] * fsum;
    if (i % 2 == 1) gauss += kWeightsG[i / 2] * fsum;
  }
  const double value = kronrod * half;
  const double diff = std::abs(kronrod - gauss) * half;
  double err = diff;
  if (diff > 0.0) {
    const double scaled = std::pow(200.0 * diff, 1.5);
    if (scaled < err) err = scaled;
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() *
                            std::abs(value));
  }
  return Panel{a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (!(a < b)) throw DomainError("integrate: requires a < b");

  std::priority_queue<Panel> panels;
  Panel whole = evaluate_panel(f, a, b);
  double total = whole.value;
  double total_err = whole.error;
  panels.push(whole);

  int subdivisions = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (++subdivisions > spec.max_subdivisions)
      throw NonConvergence("integrate: subdivision limit exhausted");
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NonConvergence("integrate: panel width at machine limit");
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  return QuadratureResult{total, total_err};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec) {
  // r = t/(1-t) maps (0,1) -> (0,inf); dr = dt/(1-t)^2.
  auto g = [&f](double t) {
    const double omt = 1.0 - t;
    const double r = t / omt;
    if (!std::isfinite(r)) return 0.0;
    const double v = f(r) / (omt * omt);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate(g, 0.0, 1.0, spec);
}

QuadratureResult integrate_exp_kernel(const std::function<double(double)>& f,
                                      double k, double q,
                                      const QuadratureSpec& spec) {
  if (k < 0.0) throw DomainError("integrate_exp_kernel: k must be nonnegative");
  if (!(q > 0.0)) throw DomainError("integrate_exp_kernel: q must be positive");
  const double s = k > 1.0 ? std::pow(k, -1.0 / q) : 1.0;
  const double ksq = k * std::pow(s, q);
  auto g = [&](double w) {
    return f(s * w) * std::exp(-s * w - ksq * std::pow(w, q));
  };
  QuadratureResult r = integrate_semi_infinite(g, spec);
  r.value *= s;
  r.err_estimate *= s;
  return r;
}

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double erfcx(double x) {
  if (x < 0.0) {
    // erfcx(-x) = 2 exp(x^2) - erfcx(x); only meaningful while exp(x^2) is finite.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x <= 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic series 1/(x sqrt(pi)) * sum (-1)^k (2k-1)!! / (2x^2)^k.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * inv2x2;
    sum += term;
  }
  return sum / (x * std::sqrt(M_PI));
}

double exp_q_scaled(double h) { return 0.5 * erfcx(h / std::sqrt(2.0)); }

double gaussian_q_tight_approx(double x) {
  if (!(x > 0.0))
    throw DomainError("gaussian_q_tight_approx: requires x > 0");
  return (1.0 - std::exp(-1.4 * x)) * std::exp(-0.5 * x * x) /
         (1.135 * std::sqrt(2.0 * M_PI) * x);
}

double lower_incomplete_gamma_neg(double s, double x) {
  if (!(s > -1.0 && s < 0.0))
    throw DomainError("lower_incomplete_gamma_neg: requires -1 < s < 0");
  if (!(x > 0.0)) throw DomainError("lower_incomplete_gamma_neg: requires x > 0");

  if (x <= 1.5) {
    // Kummer series: gamma(s,x) = x^s e^{-x} sum_k x^k / (s (s+1) ... (s+k)).
    double denom = s;
    double term = 1.0 / denom;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
      denom = s + k;
      term *= x / denom;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(x, s) * std::exp(-x) * sum;
  }

  // Continued fraction for Gamma(s,x) (modified Lentz), then subtract.
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double upper = std::exp(-x + s * std::log(x)) * h;  // Gamma(s, x)
  return std::tgamma(s) - upper;
}

double find_root(const std::function<double(double)>& g, const RootSpec& spec) {
  if (!(spec.bracket_lo < spec.bracket_hi))
    throw DomainError("find_root: bracket_lo must be < bracket_hi");
  if (!(spec.tol > 0.0)) throw DomainError("find_root: tol must be positive");

  double lo = spec.bracket_lo;
  double hi = spec.bracket_hi;
  double flo = g(lo);
  double fhi = g(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw NoSignChange("find_root: no sign change over bracket");

  for (int iter = 0; iter < spec.max_iter; ++iter) {
    // Secant trial, fall back to the midpoint when it leaves the bracket.
    double x = lo - flo * (hi - lo) / (fhi - flo);
    const double mid = 0.5 * (lo + hi);
    if (!(x > lo && x < hi)) x = mid;
    // Alternate toward bisection so the bracket always shrinks.
    if (iter % 2 == 1) x = mid;
    const double fx = g(x);
    if (std::abs(fx) <= spec.tol || (hi - lo) <= spec.tol) return x;
    if (flo * fx < 0.0) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
  }
  if ((hi - lo) <= spec.tol) return 0.5 * (lo + hi);
  throw NonConvergence("find_root: max_iter exhausted");
}

}  // namespace dsrlab
