#pragma once

// Reference (exact or objective-prior) Bayes factors used as baselines for
// the calibration bounds: normal mean with known and unknown variance,
// exponential rate with its intrinsic prior, Gamma/Scaled-Beta2 predictives,
// and the one-dimensional integral form of the nested-linear-model intrinsic
// Bayes factor. All factors are reported as B01 (evidence for the null).

namespace arlb::bayes {

// z = sqrt(n) (xbar - theta0) / sigma, prior variance tau^2 = k sigma^2.
struct NormalKnownVarScenario {
    double z;
    int n;     // >= 1
    double k;  // > 0; k = 2 matches the intrinsic prior
};

// t = sqrt(n) (xbar - theta0) / s.
struct NormalUnknownVarScenario {
    double t;
    int n;  // >= 3
};

struct ExponentialScenario {
    double xbar;     // > 0
    int n;           // >= 1
    double lambda0;  // > 0
};

// Heavy-tailed prior on a positive parameter, density
// proportional to x^(p-1) / (x + b)^(p+q).
struct ScaledBeta2 {
    double p;
    double q;
    double b;
};

// Nested linear comparison: full model with k regressors against a reduced
// model with k1 of them, both with intercept; q0/q1 are the prior exponents
// of the encompassing construction, stated in intercept-inclusive dimension
// (see giron_preset_exponents). b_ratio = RSS_reduced / RSS_full >= 1.
struct NestedLinearComparison {
    int n;
    int k;
    int k1;
    int q0;
    int q1;
    double b_ratio;
};

enum class GironPreset { reference, jeffreys, modified_jeffreys };

// Preset prior exponents with K = k+1, K1 = k1+1 design columns:
// reference (1, 1); Jeffreys (K1+1, K+1); modified Jeffreys (1, K-K1+1).
void giron_preset_exponents(GironPreset preset, int k, int k1, int& q0, int& q1);

// B01 = sqrt(1+kn) exp(-(z^2/2)/(1+1/(kn))). The _quad variant integrates
// the marginal of z under the N(0, k n) prior on the standardized mean
// numerically; the two must agree to ~1e-8 (cross-validation route).
double bf_normal_known_var(const NormalKnownVarScenario& s);
double bf_normal_known_var_quad(const NormalKnownVarScenario& s);

// Closed-form approximation to the intrinsic-prior Bayes factor for the
// unknown-variance t-test; vanishes as t -> 0.
double bf_normal_intrinsic_approx(const NormalUnknownVarScenario& s);

// Robust-prior Bayes factor; removable singularity at t = 0 handled by a
// second-order series below |t| = 1e-3, with limit sqrt(2(n+1)).
double bf_normal_robust_prior(const NormalUnknownVarScenario& s);

struct ExponentialMarginals {
    double m0;              // lambda0^n exp(-n lambda0 xbar)
    double m1;              // quadrature value (authoritative)
    double m1_closed_form;  // E_n-based closed form (cross-check)
};

// Marginals under H0 and under the intrinsic prior
// pi(lambda) = lambda0 / (lambda + lambda0)^2.
ExponentialMarginals exponential_marginals(const ExponentialScenario& s);

// B01 = m0 / m1 with the quadrature marginal, evaluated in log space.
double bf_exponential_intrinsic(const ExponentialScenario& s);

enum class Branch { lower, upper };

// Solves 2n(lambda0 xbar - 1 - ln(lambda0 xbar)) = chi2_quantile(p, 1) for
// xbar; the two roots straddle 1/lambda0.
double lr_pvalue_to_xbar_exponential(double p, int n, double lambda0, Branch branch);

struct PredictiveResult {
    double quadrature;
    double closed_form;  // NaN unless has_closed_form
    bool has_closed_form;
};

// Marginal factor of n Gamma(alpha_shape, beta) observations with mean xbar
// under a ScaledBeta2(p,q,b) prior on beta, excluding the data-only factor
// (prod x_i)^(alpha-1) / Gamma(alpha)^n which cancels in Bayes-factor
// ratios. Closed forms exist for p=q=1 and p=q=1/2.
PredictiveResult predictive_gamma_sbeta2(int n, double alpha_shape, double xbar,
                                         const ScaledBeta2& prior);

// Intrinsic Bayes factor for the nested linear comparison, reported as B01.
double bf_nested_linear_giron(const NestedLinearComparison& c);

// BIC-based factor (rss0/rss1)^(-n/2) * n^(q/2) for the reduced (null)
// model with rss0 against the full model with rss1.
double bf_bic(double rss0, double rss1, int n, int q);

} // namespace arlb::bayes
