#pragma once

// Special functions and distribution tails used throughout the toolkit.
// All functions are pure; preconditions are enforced with std::domain_error,
// iteration failures with std::runtime_error. Accuracy targets: ~1e-12
// relative for log_gamma, ~1e-10 or better elsewhere on the stated domains.

namespace arlb::specfun {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized upper incomplete gamma Q(a,x) = Gamma(a,x)/Gamma(a), in [0,1].
// Series for x < a+1, continued fraction otherwise.
double reg_gamma_upper(double a, double x);

// Chi-square upper tail P(X > x) and its inverse in the upper-tail
// convention: chi2_sf(chi2_quantile(alpha, df), df) = alpha.
double chi2_sf(double x, double df);
double chi2_quantile(double alpha, double df);

// Standard normal CDF, survival function, its natural log (safe for z up to
// ~1e7 via an asymptotic tail expansion), and the quantile (Wichura's AS241
// with one Newton polish).
double normal_cdf(double z);
double normal_sf(double z);
double log_normal_sf(double z);
double normal_quantile(double p);

// Regularized incomplete beta I_x(a,b), continued fraction with the usual
// symmetry switch at x > (a+1)/(a+b+2).
double reg_beta_inc(double x, double a, double b);

// Upper tails of F(d1,d2) and Student t(df), via reg_beta_inc; quantiles in
// the same upper-tail convention by bracketed root refinement.
double f_sf(double x, double d1, double d2);
double f_quantile(double p, double d1, double d2);
double t_sf(double t, double df);
double t_quantile(double p, double df);

// Exponential integral E_n(x) = int_1^inf exp(-x t) / t^n dt for integer
// n >= 0, x > 0 (x = 0 allowed for n >= 2), and its real-order extension
// E_nu(x) for nu >= 0. The _scaled variants return exp(x) * E(x), finite for
// large x where E itself underflows. Per-order evaluation: power series for
// x <= 1, modified Lentz continued fraction for x > 1.
double exp_integral_En(int n, double x);
double exp_integral_En_scaled(int n, double x);
double exp_integral_Ev(double nu, double x);
double exp_integral_Ev_scaled(double nu, double x);

} // namespace arlb::specfun
