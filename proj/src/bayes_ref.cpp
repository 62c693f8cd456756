#include "arlb/bayes_ref.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arlb/quadrature.hpp"
#include "arlb/specfun.hpp"

namespace arlb::bayes {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

double log_beta(double a, double b) {
    return specfun::log_gamma(a) + specfun::log_gamma(b) - specfun::log_gamma(a + b);
}

// ln(1 + exp(w)) without overflow.
double log1p_exp(double w) {
    return w > 30.0 ? w + std::log1p(std::exp(-w)) : std::log1p(std::exp(w));
}

} // namespace

void giron_preset_exponents(GironPreset preset, int k, int k1, int& q0, int& q1) {
    const int K = k + 1;
    const int K1 = k1 + 1;
    switch (preset) {
        case GironPreset::reference:
            q0 = 1;
            q1 = 1;
            break;
        case GironPreset::jeffreys:
            q0 = K1 + 1;
            q1 = K + 1;
            break;
        case GironPreset::modified_jeffreys:
            q0 = 1;
            q1 = K - K1 + 1;
            break;
    }
}

double bf_normal_known_var(const NormalKnownVarScenario& s) {
    require(s.n >= 1, "bf_normal_known_var: n must be >= 1");
    require(s.k > 0.0, "bf_normal_known_var: k must be > 0");
    const double kn = s.k * s.n;
    const double log_b = 0.5 * std::log1p(kn) - 0.5 * s.z * s.z / (1.0 + 1.0 / kn);
    return std::exp(log_b);
}

double bf_normal_known_var_quad(const NormalKnownVarScenario& s) {
    require(s.n >= 1, "bf_normal_known_var: n must be >= 1");
    require(s.k > 0.0, "bf_normal_known_var: k must be > 0");
    // z | theta ~ N(sqrt(kn) u, 1) with u standard normal under the prior.
    const double scale = std::sqrt(s.k * s.n);
    const double z = s.z;
    auto integrand = [z, scale](double u) {
        const double d = z - scale * u;
        return std::exp(-0.5 * (d * d + u * u)) / (2.0 * M_PI);
    };
    auto half = [&integrand](double sign) {
        return quad::integrate_to_inf_or_throw(
            [&integrand, sign](double u) { return integrand(sign * u); }, 0.0);
    };
    const double m1 = half(1.0) + half(-1.0);
    const double f0 = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
    return f0 / m1;
}

double bf_normal_intrinsic_approx(const NormalUnknownVarScenario& s) {
    require(s.n >= 2, "bf_normal_intrinsic_approx: n must be >= 2");
    if (s.t == 0.0) return 0.0;
    const double r = s.t * s.t / (s.n - 1.0);
    const double log_b = 0.5 * std::log(static_cast<double>(s.n)) -
                         0.5 * s.n * std::log1p(r) + std::log(r) - log1p_exp(1.0 + r);
    return std::exp(log_b);
}

double bf_normal_robust_prior(const NormalUnknownVarScenario& s) {
    require(s.n >= 3, "bf_normal_robust_prior: n must be >= 3");
    const double n = s.n;
    const double t2 = s.t * s.t;
    const double limit_factor = std::sqrt(2.0 * (n + 1.0));
    if (std::fabs(s.t) < 1e-3) {
        // Second-order series about the removable singularity at t = 0.
        return limit_factor * (1.0 - n * n * t2 / (2.0 * (n * n - 1.0)));
    }
    const double log_head = 0.5 * std::log(2.0 / (n + 1.0)) +
                            std::log((n - 2.0) / (n - 1.0)) + std::log(t2) -
                            0.5 * n * std::log1p(t2 / (n - 1.0));
    // 1 - (1 + 2t^2/(n^2-1))^(-(n-2)/2) via expm1/log1p, exact for small t.
    const double denom = -std::expm1(-0.5 * (n - 2.0) * std::log1p(2.0 * t2 / (n * n - 1.0)));
    return std::exp(log_head) / denom;
}

ExponentialMarginals exponential_marginals(const ExponentialScenario& s) {
    require(s.xbar > 0.0, "exponential_marginals: xbar must be > 0");
    require(s.lambda0 > 0.0, "exponential_marginals: lambda0 must be > 0");
    require(s.n >= 1, "exponential_marginals: n must be >= 1");
    const double n = s.n;
    const double xb = s.xbar;
    const double l0 = s.lambda0;
    ExponentialMarginals out;
    out.m0 = std::exp(n * std::log(l0) - n * l0 * xb);

    // Quadrature of lambda^n exp(-n lambda xbar) * l0/(lambda+l0)^2, scaled
    // by the likelihood peak at lambda = 1/xbar to keep the integrand in
    // range for large n.
    const double log_peak = -n * (1.0 + std::log(xb));
    auto integrand = [n, xb, l0, log_peak](double lam) {
        if (lam <= 0.0) return 0.0;
        const double log_lik = n * std::log(lam) - n * lam * xb;
        const double d = lam + l0;
        return std::exp(log_lik - log_peak) * l0 / (d * d);
    };
    const double scaled = quad::integrate_to_inf_or_throw(integrand, 0.0);
    out.m1 = std::exp(log_peak + std::log(scaled));

    // Closed form via the exponential integral, c = n xbar lambda0:
    // m1 = l0 Gamma(n)/(n xbar)^(n-1) * (n (xbar l0 + 1) e^c E_n(c) - 1).
    const double c = n * xb * l0;
    const double braced = n * (xb * l0 + 1.0) * specfun::exp_integral_En_scaled(s.n, c) - 1.0;
    out.m1_closed_form = std::exp(std::log(l0) + specfun::log_gamma(n) -
                                  (n - 1.0) * std::log(n * xb) + std::log(braced));
    return out;
}

double bf_exponential_intrinsic(const ExponentialScenario& s) {
    const ExponentialMarginals m = exponential_marginals(s);
    // Ratio in log space; m0/m1 with the quadrature marginal.
    const double n = s.n;
    const double log_m0 = n * std::log(s.lambda0) - n * s.lambda0 * s.xbar;
    return std::exp(log_m0 - std::log(m.m1));
}

double lr_pvalue_to_xbar_exponential(double p, int n, double lambda0, Branch branch) {
    require(p > 0.0 && p < 1.0, "lr_pvalue_to_xbar_exponential: p must be in (0,1)");
    require(n >= 1, "lr_pvalue_to_xbar_exponential: n must be >= 1");
    require(lambda0 > 0.0, "lr_pvalue_to_xbar_exponential: lambda0 must be > 0");
    // Solve h(u) = u - 1 - ln(u) = target on the requested side of u = 1,
    // where u = lambda0 * xbar.
    const double target = specfun::chi2_quantile(p, 1) / (2.0 * n);
    if (target == 0.0) return 1.0 / lambda0;
    auto h = [target](double u) { return u - 1.0 - std::log(u) - target; };
    double lo, hi;
    if (branch == Branch::lower) {
        lo = std::numeric_limits<double>::min();
        hi = 1.0;
    } else {
        lo = 1.0;
        hi = 2.0 + 2.0 * target;
        while (h(hi) < 0.0) hi *= 2.0;  // h grows linearly; bracket is near
    }
    // Bisection: h is monotone on each side of the minimum at u = 1.
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool below = h(mid) < 0.0;
        // h < 0 between the roots: move toward the boundary away from 1.
        if (branch == Branch::lower) {
            if (below) hi = mid; else lo = mid;
        } else {
            if (below) lo = mid; else hi = mid;
        }
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi) / lambda0;
}

PredictiveResult predictive_gamma_sbeta2(int n, double alpha_shape, double xbar,
                                         const ScaledBeta2& prior) {
    require(n >= 1, "predictive_gamma_sbeta2: n must be >= 1");
    require(alpha_shape > 0.0, "predictive_gamma_sbeta2: alpha_shape must be > 0");
    require(xbar > 0.0, "predictive_gamma_sbeta2: xbar must be > 0");
    require(prior.p > 0.0 && prior.q > 0.0 && prior.b > 0.0,
            "predictive_gamma_sbeta2: prior parameters must be > 0");
    const double na = n * alpha_shape;
    const double c = n * xbar * prior.b;
    // Shared prefactor b^q / B(p,q) * (n xbar)^(q - n alpha) applied to
    // J = int_0^inf v^(n alpha + p - 1) e^-v / (v + c)^(p+q) dv.
    const double log_pre = prior.q * std::log(prior.b) - log_beta(prior.p, prior.q) +
                           (prior.q - na) * std::log(n * xbar);
    const double vpow = na + prior.p - 1.0;
    const double dpow = prior.p + prior.q;
    auto integrand = [vpow, dpow, c](double v) {
        if (v <= 0.0) return 0.0;
        return std::exp(vpow * std::log(v) - v - dpow * std::log(v + c));
    };
    const double j_quad = quad::integrate_to_inf_or_throw(integrand, 0.0);

    PredictiveResult out;
    out.quadrature = std::exp(log_pre + std::log(j_quad));
    out.closed_form = std::numeric_limits<double>::quiet_NaN();
    out.has_closed_form = false;
    if (prior.p == 1.0 && prior.q == 1.0) {
        // J = Gamma(na) ((na + c) e^c E_na(c) - 1)
        const double braced = (na + c) * specfun::exp_integral_Ev_scaled(na, c) - 1.0;
        out.closed_form = std::exp(log_pre + specfun::log_gamma(na) + std::log(braced));
        out.has_closed_form = true;
    } else if (prior.p == 0.5 && prior.q == 0.5) {
        // J = Gamma(na + 1/2) e^c E_(na+1/2)(c)
        const double log_j = specfun::log_gamma(na + 0.5) +
                             std::log(specfun::exp_integral_Ev_scaled(na + 0.5, c));
        out.closed_form = std::exp(log_pre + log_j);
        out.has_closed_form = true;
    }
    return out;
}

double bf_nested_linear_giron(const NestedLinearComparison& c) {
    require(c.k > c.k1 && c.k1 >= 0, "bf_nested_linear_giron: need k > k1 >= 0");
    require(c.n > c.k + 1, "bf_nested_linear_giron: need n > k + 1");
    require(c.q0 >= 0 && c.q1 >= c.q0,
            "bf_nested_linear_giron: need q1 >= q0 >= 0 for a convergent integral");
    require(c.b_ratio >= 1.0, "bf_nested_linear_giron: b_ratio must be >= 1");
    const double n = c.n;
    const double M = c.k + 2;       // K + 1 with K = k+1 design columns
    const int k0 = c.k - c.k1;
    const double B = 1.0 / c.b_ratio;  // RSS_full / RSS_reduced <= 1
    const double sin_pow = k0 + c.q0 - 1;
    const double cos_pow = c.q1 - c.q0;
    const double a_num = 0.5 * (n + c.q0 - (c.k + 1) - 1);
    const double a_den = 0.5 * (n + c.q0 - (c.k1 + 1) - 1);
    auto log_f = [&](double phi) {
        const double s2 = std::sin(phi) * std::sin(phi);
        double lf = a_num * std::log(n + M * s2) - a_den * std::log(n * B + M * s2);
        if (sin_pow != 0.0) lf += sin_pow * std::log(std::sin(phi));
        if (cos_pow != 0.0) lf += cos_pow * std::log(std::cos(phi));
        return lf;
    };
    // Shift by the integrand's log maximum so the quadrature stays in range.
    double shift = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 64; ++i) {
        shift = std::max(shift, log_f(M_PI_2 * i / 64.0));
    }
    auto integrand = [&](double phi) {
        if (phi <= 0.0 || phi >= M_PI_2) return 0.0;
        return std::exp(log_f(phi) - shift);
    };
    const double integral = quad::integrate_or_throw(integrand, 0.0, M_PI_2);
    const double log_b10 = std::log(2.0) + 0.5 * k0 * std::log(M) -
                           log_beta(0.5 * c.q1, 0.5) + shift + std::log(integral);
    return std::exp(-log_b10);  // reported as B01
}

double bf_bic(double rss0, double rss1, int n, int q) {
    require(rss0 >= rss1 && rss1 > 0.0, "bf_bic: need rss0 >= rss1 > 0");
    require(n >= 1, "bf_bic: n must be >= 1");
    require(q >= 1, "bf_bic: q must be >= 1");
    return std::exp(-0.5 * n * std::log(rss0 / rss1) + 0.5 * q * std::log(static_cast<double>(n)));
}

} // namespace arlb::bayes
