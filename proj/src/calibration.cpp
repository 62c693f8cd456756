#include "arlb/calibration.hpp"

#include <cmath>
#include <stdexcept>

#include "arlb/specfun.hpp"

namespace arlb::cal {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

void check_alpha_q_n(double alpha, int q, double n_star, const char* fn) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error(std::string(fn) + ": alpha must be in (0,1)");
    if (q < 1) throw std::domain_error(std::string(fn) + ": q must be >= 1");
    if (!(n_star >= 1.0)) throw std::domain_error(std::string(fn) + ": n_star must be >= 1");
}

} // namespace

double robust_lower_bound(double p) {
    require(p > 0.0 && p < 1.0, "robust_lower_bound: p must be in (0,1)");
    return -M_E * p * std::log(p);
}

double posterior_prob_bound(double p) {
    const double b = robust_lower_bound(p);
    return b / (1.0 + b);
}

double adaptive_alpha(double alpha, int q, double n_star, double c_alpha) {
    check_alpha_q_n(alpha, q, n_star, "adaptive_alpha");
    require(c_alpha > 0.0, "adaptive_alpha: c_alpha must be > 0");
    const double x2 = specfun::chi2_quantile(alpha, q);
    const double h = 0.5 * q;
    const double log_val = (h - 1.0) * std::log(x2 + q * std::log(n_star)) -
                           (h - 1.0) * std::log(2.0) - h * std::log(n_star) -
                           specfun::log_gamma(h) + std::log(c_alpha);
    return std::exp(log_val);
}

double adaptive_alpha_exact_q1(double alpha, double n) {
    check_alpha_q_n(alpha, 1, n, "adaptive_alpha_exact_q1");
    const double x2 = specfun::chi2_quantile(alpha, 1);
    return specfun::chi2_sf(x2 + std::log(n), 1);
}

double adaptive_alpha_reference(const ReferenceExperiment& ref, double n_star) {
    require(ref.alpha0 > 0.0 && ref.alpha0 < 1.0, "adaptive_alpha_reference: alpha0 must be in (0,1)");
    require(ref.n0 >= 1.0, "adaptive_alpha_reference: n0 must be >= 1");
    require(n_star >= 1.0, "adaptive_alpha_reference: n_star must be >= 1");
    const double x2 = specfun::chi2_quantile(ref.alpha0, 1);
    return ref.alpha0 * std::sqrt(ref.n0 * (std::log(ref.n0) + x2)) /
           std::sqrt(n_star * (std::log(n_star) + x2));
}

double stabilizer_g(double alpha, int q, double n_star) {
    check_alpha_q_n(alpha, q, n_star, "stabilizer_g");
    const double x2 = specfun::chi2_quantile(alpha, q);
    const double h = 0.5 * q;
    const double log_g = h * (std::log(2.0 * n_star) - std::log(x2 + q * std::log(n_star))) +
                         specfun::log_gamma(h) - 1.0;
    return std::exp(log_g);
}

CalibrationResult arlb(const EvidenceInput& input) {
    require(input.p_value > 0.0 && input.p_value < 1.0, "arlb: p_value must be in (0,1)");
    require(input.q >= 1, "arlb: q must be >= 1");
    require(input.n_star >= 1.0, "arlb: n_star must be >= 1");
    CalibrationResult r;
    r.b_l = robust_lower_bound(input.p_value);
    r.g = stabilizer_g(input.p_value, input.q, input.n_star);
    r.o_l = r.b_l * std::max(1.0, r.g);
    r.p_l = r.o_l / (1.0 + r.o_l);
    r.rlb_valid = input.p_value < 1.0 / M_E;
    return r;
}

double arlb_self_calibration_limit(double alpha, int q, double n_star) {
    const double a_n = adaptive_alpha(alpha, q, n_star, 1.0);
    return robust_lower_bound(a_n) * stabilizer_g(alpha, q, n_star);
}

} // namespace arlb::cal
