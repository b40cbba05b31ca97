#include "survgg/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace survgg {

namespace {

constexpr double kLogSqrt2Pi = 0.9189385332046727417803297364;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

// Stirling tail: sum B_{2n} / (2n (2n-1) y^{2n-1}), valid for y >= 15.
double stirling_series(double y) {
  static constexpr double c[8] = {
      1.0 / 12.0,
      -1.0 / 360.0,
      1.0 / 1260.0,
      -1.0 / 1680.0,
      1.0 / 1188.0,
      -691.0 / 360360.0,
      1.0 / 156.0,
      -3617.0 / 122400.0,
  };
  const double r = 1.0 / y;
  const double r2 = r * r;
  double s = c[7];
  for (int k = 6; k >= 0; --k) s = c[k] + r2 * s;
  return r * s;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma argument");
  double shift = 0.0;
  double y = x;
  while (y < 15.0) {
    shift += std::log(y);
    y += 1.0;
  }
  return (y - 0.5) * std::log(y) - y + kLogSqrt2Pi + stirling_series(y) - shift;
}

double digamma(double x) {
  require_positive(x, "digamma argument");
  double acc = 0.0;
  double y = x;
  while (y < 15.0) {
    acc -= 1.0 / y;
    y += 1.0;
  }
  // psi(y) ~ ln y - 1/(2y) - sum B_{2n} / (2n y^{2n})
  static constexpr double c[7] = {
      -1.0 / 12.0, 1.0 / 120.0, -1.0 / 252.0, 1.0 / 240.0,
      -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0,
  };
  const double r2 = 1.0 / (y * y);
  double s = c[6];
  for (int k = 5; k >= 0; --k) s = c[k] + r2 * s;
  return acc + std::log(y) - 0.5 / y + r2 * s;
}

double trigamma(double x) {
  require_positive(x, "trigamma argument");
  double acc = 0.0;
  double y = x;
  while (y < 15.0) {
    acc += 1.0 / (y * y);
    y += 1.0;
  }
  // psi'(y) ~ 1/y + 1/(2y^2) + sum B_{2n} / y^{2n+1}
  static constexpr double c[7] = {
      1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
      5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
  };
  const double r2 = 1.0 / (y * y);
  double s = c[6];
  for (int k = 5; k >= 0; --k) s = c[k] + r2 * s;
  return acc + 1.0 / y + 0.5 * r2 + r2 / y * s;
}

namespace {

// Lower series: P(a,x) = x^a e^{-x} / Gamma(a+1) * sum_n x^n / ((a+1)...(a+n)).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  const double lg = a * std::log(x) - x - log_gamma(a);
  return std::exp(lg) * sum;
}

// Upper continued fraction (modified Lentz): Q(a,x) = x^a e^{-x}/Gamma(a) * CF.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  const double lg = a * std::log(x) - x - log_gamma(a);
  return std::exp(lg) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  require_positive(a, "incomplete gamma shape");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    if (x == kInf) return 1.0;
    throw std::domain_error("incomplete gamma argument must be nonnegative");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  require_positive(a, "incomplete gamma shape");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    if (x == kInf) return 0.0;
    throw std::domain_error("incomplete gamma argument must be nonnegative");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile needs p in (0,1)");
  // Acklam's approximation.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  double z;
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    z = (((((-7.784894002430293e-03 * q - 3.223964580411365e-01) * q -
            2.400758277161838e+00) * q - 2.549732539343734e+00) * q +
          4.374664141464968e+00) * q + 2.938163982698783e+00) /
        ((((7.784695709041462e-03 * q + 3.224671290700398e-01) * q +
           2.445134137142996e+00) * q + 3.754408661907416e+00) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    z = -(((((-7.784894002430293e-03 * q - 3.223964580411365e-01) * q -
             2.400758277161838e+00) * q - 2.549732539343734e+00) * q +
           4.374664141464968e+00) * q + 2.938163982698783e+00) /
        ((((7.784695709041462e-03 * q + 3.224671290700398e-01) * q +
           2.445134137142996e+00) * q + 3.754408661907416e+00) * q + 1.0);
  }
  // One Newton step through the exact CDF.
  const double cdf = 0.5 * std::erfc(-z * M_SQRT1_2);
  const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  if (pdf > 0.0) z -= (cdf - p) / pdf;
  return z;
}

namespace {

double gamma_quantile_newton(double a, double target_p, double x0) {
  // Safeguarded Newton on P(a,x) - p with a bisection bracket.
  double lo = 0.0;
  double hi = kInf;
  double x = x0;
  for (int it = 0; it < 200; ++it) {
    const double p = regularized_gamma_p(a, x);
    const double err = p - target_p;
    if (std::abs(err) <= 1e-12 * std::max(target_p, 1.0 - target_p) ||
        std::abs(err) <= 1e-14) {
      return x;
    }
    if (err > 0.0) hi = std::min(hi, x); else lo = std::max(lo, x);
    const double logpdf = (a - 1.0) * std::log(x) - x - log_gamma(a);
    double step = err / std::exp(logpdf);
    double xn = x - step;
    if (!(xn > lo && xn < hi) || !std::isfinite(xn)) {
      xn = std::isfinite(hi) ? 0.5 * (lo + hi) : std::max(2.0 * x, x + 1.0);
    }
    if (xn == x) return x;
    x = xn;
  }
  return x;
}

}  // namespace

double gamma_quantile(double a, double p) {
  require_positive(a, "gamma_quantile shape");
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("gamma_quantile needs p in (0,1)");
  // Wilson-Hilferty start.
  const double z = normal_quantile(p);
  const double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
  double x0 = a * t * t * t;
  if (!(x0 > 0.0)) {
    // Small-a corner: invert the leading term P ~ x^a / Gamma(a+1).
    x0 = std::exp((std::log(p) + log_gamma(a + 1.0)) / a);
  }
  return gamma_quantile_newton(a, p, x0);
}

double gamma_quantile_upper(double a, double q) {
  require_positive(a, "gamma_quantile_upper shape");
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("gamma_quantile_upper needs q in (0,1)");
  if (q > 1e-10) return gamma_quantile(a, 1.0 - q);
  // Deep upper tail: fixed point of x = -ln q - ln Gamma(a) + (a-1) ln x,
  // then Newton on ln Q.
  const double lq = std::log(q);
  double x = std::max(a + 10.0, -lq);
  for (int it = 0; it < 64; ++it) {
    const double xn = -lq - log_gamma(a) + (a - 1.0) * std::log(x);
    if (!(xn > 0.0) || !std::isfinite(xn)) break;
    if (std::abs(xn - x) < 1e-12 * x) { x = xn; break; }
    x = xn;
  }
  for (int it = 0; it < 100; ++it) {
    const double Q = regularized_gamma_q(a, x);
    if (Q <= 0.0) { x *= 0.98; continue; }
    const double logpdf = (a - 1.0) * std::log(x) - x - log_gamma(a);
    const double g = std::log(Q) - lq;
    const double dg = -std::exp(logpdf) / Q;  // d logQ / dx
    if (std::abs(g) < 1e-12) break;
    const double xn = x - g / dg;
    if (!(xn > 0.0) || !std::isfinite(xn) || xn == x) break;
    x = xn;
  }
  return x;
}

}  // namespace survgg
