#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "arlb/quadrature.hpp"
#include "arlb/specfun.hpp"

using namespace arlb::quad;

TEST_CASE("exact polynomial and exponential integrals") {
    Result r = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));

    r = integrate_to_inf([](double x) { return std::exp(-x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

    r = integrate_to_inf([](double x) { return x * std::exp(-x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

    r = integrate_to_inf([](double x) { return std::exp(-0.5 * x * x); }, 0.0);
    CHECK(r.value == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
}

TEST_CASE("cross-check against the exponential integral") {
    Result r = integrate_to_inf([](double t) { return std::exp(-t) / t; }, 1.0);
    CHECK(r.converged);
    CHECK(r.value ==
          doctest::Approx(arlb::specfun::exp_integral_En(1, 1.0)).epsilon(1e-11));
}

TEST_CASE("integrable endpoint singularity") {
    Result r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("error estimate honors the requested tolerances") {
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-12;
    Result r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI, spec);
    CHECK(r.converged);
    CHECK(r.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(r.value)));
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("non-convergence is reported, never silent") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-300;
    tight.rel_tol = 1e-300;
    tight.max_subdivisions = 4;
    Result r = integrate([](double x) { return std::sin(50.0 * x); }, 0.0, 30.0, tight);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(
        integrate_or_throw([](double x) { return std::sin(50.0 * x); }, 0.0, 30.0,
                           tight),
        std::runtime_error);
    CHECK_THROWS_AS(
        integrate_to_inf_or_throw(
            [](double x) { return std::sin(50.0 * x) / (1.0 + x * x * 1e-12); }, 0.0,
            tight),
        std::runtime_error);
}

TEST_CASE("or-throw wrappers return the converged value") {
    double v = integrate_or_throw([](double x) { return x * x; }, 0.0, 2.0);
    CHECK(v == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    double w = integrate_to_inf_or_throw(
        [](double x) { return std::exp(-2.0 * x); }, 1.0);
    CHECK(w == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite lower endpoint is honored") {
    // integral over [3, inf) of e^{-x} = e^{-3}.
    Result r = integrate_to_inf([](double x) { return std::exp(-x); }, 3.0);
    CHECK(r.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
}
