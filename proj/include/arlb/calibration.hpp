#pragma once

// Calibration of p-values into lower bounds on Bayes factors and posterior
// probabilities of the null, with the sample-size-adaptive stabilizer that
// turns the raw bound into approximate posterior odds.

namespace arlb::cal {

// p-value together with the effective sample size and the dimension
// difference between the compared models.
struct EvidenceInput {
    double p_value;  // in (0,1)
    double n_star;   // >= 1
    int q;           // >= 1
};

// Anchoring experiment for the adaptive significance level.
struct ReferenceExperiment {
    double n0;      // >= 1
    double alpha0;  // in (0,1)
};

struct CalibrationResult {
    double b_l;      // robust lower bound on B01
    double g;        // raw stabilizer g_q(n*)
    double o_l;      // adaptive odds bound, b_l * max(1, g)
    double p_l;      // o_l / (1 + o_l)
    bool rlb_valid;  // p_value < 1/e, the bound's validity domain
};

// -e * p * ln(p), a lower bound on the Bayes factor B01; meaningful for
// p < 1/e (callers get the raw formula value everywhere in (0,1)).
double robust_lower_bound(double p);

// B_L / (1 + B_L): lower bound on P(H0 | data) under equal prior odds.
double posterior_prob_bound(double p);

// Adaptive significance level
//   alpha_n(q) = [x2 + q ln n]^(q/2-1) / (2^(q/2-1) n^(q/2) Gamma(q/2)) * c,
// x2 the upper-alpha chi-square(q) quantile. Evaluated in log space.
double adaptive_alpha(double alpha, int q, double n_star, double c_alpha);

// Exact q = 1 version: upper chi-square(1) tail at the shifted quantile.
double adaptive_alpha_exact_q1(double alpha, double n);

// Reference-experiment scaling:
//   alpha(n) = alpha0 * sqrt(n0 (ln n0 + x2)) / sqrt(n (ln n + x2)),
// x2 the upper-alpha0 chi-square(1) quantile. Equals alpha0 at n = n0.
double adaptive_alpha_reference(const ReferenceExperiment& ref, double n_star);

// Stabilizer g_q(n*) = [2 n* / (x2 + q ln n*)]^(q/2) * Gamma(q/2) / e where
// x2 is the upper-alpha chi-square(q) quantile and alpha is the observed
// p-value. Log-space evaluation.
double stabilizer_g(double alpha, int q, double n_star);

// Bundle: B_L, g, O_L = B_L * max(1, g), P_L = O_L/(1+O_L). The max guard
// keeps the odds bound from dropping below the plain bound at very small
// n*, where g < 1.
CalibrationResult arlb(const EvidenceInput& input);

// Diagnostic product B_L(alpha_n*(q)) * g_q(n*) whose n* -> inf limit is 1;
// evaluated with c_alpha = 1.
double arlb_self_calibration_limit(double alpha, int q, double n_star);

} // namespace arlb::cal
