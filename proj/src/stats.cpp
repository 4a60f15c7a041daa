#include "fdrseq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fdrseq/errors.hpp"

namespace fdrseq::stats {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtHalf = 0.70710678118654752440084436210484904;

[[noreturn]] void fail_numeric(const char* what, double a, double b, double x) {
  std::ostringstream ss;
  ss << what << " (a=" << a << ", b=" << b << ", x=" << x << ")";
  throw NumericalError(ss.str());
}

// Continued fraction for the incomplete beta function, modified Lentz.
double beta_cont_frac(double a, double b, double x) {
  constexpr double kFpMin = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  fail_numeric("incomplete beta continued fraction did not converge", a, b, x);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: argument must be positive");
  // Lanczos, g = 7.
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection formula.
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double sum = coef[0];
  for (int i = 1; i < 9; ++i) sum += coef[i] / (z + i);
  const double t = z + 7.5;
  return 0.91893853320467274178032973640562  // log(sqrt(2*pi))
         + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("regularized_incomplete_beta: a and b must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("regularized_incomplete_beta: x must lie in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  double result;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    result = front * beta_cont_frac(a, b, x) / a;
  } else {
    result = 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
  }
  return std::clamp(result, 0.0, 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kSqrtHalf); }

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("student_t_cdf: df must be positive");
  if (std::isnan(t)) throw std::invalid_argument("student_t_cdf: t is NaN");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("student_t_quantile: p must lie in (0,1)");
  }
  if (p == 0.5) return 0.0;
  double lo = -1.0, hi = 1.0;
  int guard = 0;
  while (student_t_cdf(hi, df) < p) {
    hi *= 2.0;
    if (++guard > 2048) throw NumericalError("student_t_quantile: bracket expansion failed");
  }
  while (student_t_cdf(lo, df) > p) {
    lo *= 2.0;
    if (++guard > 4096) throw NumericalError("student_t_quantile: bracket expansion failed");
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, df) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-14 * std::max(1.0, std::fabs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

double noncentral_t_cdf(double t, double df, double delta) {
  if (!(df > 0.0)) throw std::invalid_argument("noncentral_t_cdf: df must be positive");
  if (std::isnan(t) || std::isnan(delta)) {
    throw std::invalid_argument("noncentral_t_cdf: NaN argument");
  }
  if (t < 0.0) return 1.0 - noncentral_t_cdf(-t, df, -delta);
  if (std::isinf(t)) return 1.0;

  const double lambda = delta * delta;
  if (0.5 * lambda > 700.0) {
    // exp(-lambda/2) underflows; the series contribution is below double
    // resolution either way.
    return std::clamp(normal_cdf(-delta), 0.0, 1.0);
  }
  const double x = t * t / (t * t + df);
  if (x <= 0.0) return std::clamp(normal_cdf(-delta), 0.0, 1.0);

  double p = 0.5 * std::exp(-0.5 * lambda);
  double q = std::sqrt(2.0 / kPi) * p * delta;
  double s = -0.5 * std::expm1(-0.5 * lambda);  // half the remaining Poisson mass
  double a = 0.5;
  const double b = 0.5 * df;
  const double rxb = std::pow(1.0 - x, b);
  const double log_beta_ab = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
  double xodd = regularized_incomplete_beta(a, b, x);
  double godd = 2.0 * rxb * std::exp(a * std::log(x) - log_beta_ab);
  double xeven = 1.0 - rxb;
  double geven = b * x * rxb;
  double sum = p * xodd + q * xeven;

  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 3000;
  bool converged = false;
  for (int it = 1; it <= kMaxIter; ++it) {
    a += 1.0;
    xodd -= godd;
    xeven -= geven;
    godd *= x * (a + b - 1.0) / a;
    geven *= x * (a + b - 0.5) / (a + 0.5);
    p *= lambda / (2.0 * it);
    q *= lambda / (2.0 * it + 1.0);
    sum += p * xodd + q * xeven;
    s -= p;
    const double err_bound = 2.0 * s * (xodd - godd);
    if (err_bound <= kTol) {
      converged = true;
      break;
    }
  }
  if (!converged) fail_numeric("noncentral t series did not converge", df, delta, t);
  return std::clamp(sum + normal_cdf(-delta), 0.0, 1.0);
}

double two_sided_t_pvalue(double t, double df) {
  return std::clamp(2.0 * (1.0 - student_t_cdf(std::fabs(t), df)), 0.0, 1.0);
}

double one_sided_t_pvalue(double t, double df) {
  return std::clamp(1.0 - student_t_cdf(t, df), 0.0, 1.0);
}

}  // namespace fdrseq::stats
