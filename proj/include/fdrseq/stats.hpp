#pragma once

namespace fdrseq::stats {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

// Regularized incomplete beta function I_x(a, b), continued fraction
// evaluation. a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// Standard normal CDF.
double normal_cdf(double x);

// Central Student t CDF with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

// Inverse of student_t_cdf in t, by bracketed bisection.
double student_t_quantile(double p, double df);

// Noncentral t CDF, series expansion over incomplete beta functions.
double noncentral_t_cdf(double t, double df, double delta);

// Two-sided p-value 2*(1 - F(|t|)) and upper-tail p-value 1 - F(t).
double two_sided_t_pvalue(double t, double df);
double one_sided_t_pvalue(double t, double df);

}  // namespace fdrseq::stats
