#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "arlb/calibration.hpp"
#include "arlb/linmod.hpp"
#include "arlb/specfun.hpp"

using namespace arlb::linmod;

namespace {
bool rounds_to(double value, double printed, int decimals) {
    char a[64], b[64];
    std::snprintf(a, sizeof a, "%.*f", decimals, value);
    std::snprintf(b, sizeof b, "%.*f", decimals, printed);
    return std::strcmp(a, b) == 0;
}
}  // namespace

TEST_CASE("embedded cement data") {
    const Dataset& d = hald_dataset();
    CHECK(d.y.size() == 13);
    CHECK(d.X.rows() == 13);
    CHECK(d.X.cols() == 4);
    REQUIRE(d.column_labels.size() == 4);
    CHECK(d.column_labels[0] == "x1");
    CHECK(d.column_labels[3] == "x4");
    CHECK(d.y(0) == 78.5);
    CHECK(d.X(0, 0) == 7.0);
    CHECK(d.X(0, 3) == 60.0);
    CHECK(d.y(12) == 109.4);

    std::string csv = hald_csv();
    CHECK(csv.rfind("y,x1,x2,x3,x4\n78.5,7,26,6,60\n", 0) == 0);
    CHECK(csv.back() == '\n');
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 14);
    CHECK(csv.find("109.4,10,68,8,12\n") != std::string::npos);
}

TEST_CASE("least-squares fits reproduce the classical decompositions") {
    const Dataset& d = hald_dataset();

    FitResult full = fit_ols(d, {1, 2, 3, 4});
    CHECK(std::fabs(full.rss - 47.863639350498865) < 1e-9);
    CHECK(full.df_resid == 8);
    CHECK(full.coefficients.size() == 5);

    // Intercept-only residual sum of squares is the total sum of squares.
    FitResult none = fit_ols(d, {});
    CHECK(std::fabs(none.rss - 2715.7630769230777) < 1e-9);
    CHECK(none.df_resid == 12);
    CHECK(std::fabs(none.coefficients(0) - d.y.mean()) < 1e-12);

    struct Anchor {
        std::vector<int> subset;
        double rss;
    };
    const Anchor anchors[] = {
        {{2, 3, 4}, 73.8146},  {{1, 3}, 1227.0721}, {{1, 4}, 74.7621},
        {{2, 3}, 415.4427},    {{2, 4}, 868.8801},  {{3, 4}, 175.7380},
        {{1}, 1265.6867},      {{2}, 906.3363},     {{3}, 1939.4005},
        {{4}, 883.8669},
    };
    for (const Anchor& a : anchors) {
        CHECK(rounds_to(fit_ols(d, a.subset).rss, a.rss, 4));
    }

    // Residuals are orthogonal to every design column.
    for (const auto& subset :
         {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 3}, std::vector<int>{4}}) {
        FitResult fit = fit_ols(d, subset);
        Eigen::MatrixXd design(13, subset.size() + 1);
        design.col(0).setOnes();
        for (size_t j = 0; j < subset.size(); ++j)
            design.col(static_cast<int>(j) + 1) = d.X.col(subset[j] - 1);
        Eigen::VectorXd resid = d.y - design * fit.coefficients;
        CHECK((design.transpose() * resid).cwiseAbs().maxCoeff() <
              1e-9 * d.y.norm() * design.norm());
    }

    // Adding a regressor never increases the residual sum of squares.
    double prev = none.rss;
    for (const auto& subset : {std::vector<int>{1}, std::vector<int>{1, 2},
                               std::vector<int>{1, 2, 3}, std::vector<int>{1, 2, 3, 4}}) {
        double rss = fit_ols(d, subset).rss;
        CHECK(rss <= prev + 1e-9);
        prev = rss;
    }

    // A constant response is fit exactly by the intercept.
    Dataset flat = d;
    flat.y.setConstant(5.0);
    CHECK(fit_ols(flat, {1, 2}).rss < 1e-12);

    CHECK_THROWS_AS(fit_ols(d, {1, 1}), std::domain_error);  // rank deficient
    CHECK_THROWS_AS(fit_ols(d, {5}), std::domain_error);     // out of range
    Dataset tiny;
    tiny.y = Eigen::VectorXd::LinSpaced(3, 0.0, 2.0);
    tiny.X = Eigen::MatrixXd::Random(3, 2);
    CHECK_THROWS_AS(fit_ols(tiny, {1, 2}), std::domain_error);  // no residual df
}

TEST_CASE("nested F test") {
    const Dataset& d = hald_dataset();
    FitResult full = fit_ols(d, {1, 2, 3, 4});
    FitResult reduced = fit_ols(d, {2, 3, 4});
    FTestResult t = f_test_nested(full, reduced, 13);
    CHECK(rounds_to(t.p_value, 0.07082, 5));
    // The p-value is the upper tail of the F statistic itself.
    CHECK(std::fabs(arlb::specfun::f_sf(t.f_stat, 1.0, 8.0) - t.p_value) < 1e-14);

    // Equal fits: zero statistic, p-value one.
    FitResult same = full;
    same.df_resid = full.df_resid + 1;
    FTestResult z = f_test_nested(full, same, 13);
    CHECK(z.f_stat == 0.0);
    CHECK(z.p_value == 1.0);

    FitResult better = full;
    better.rss = full.rss - 1.0;
    better.df_resid = full.df_resid + 1;
    CHECK_THROWS_AS(f_test_nested(full, better, 13), std::domain_error);
    CHECK_THROWS_AS(f_test_nested(full, full, 13), std::domain_error);  // q = 0
}

TEST_CASE("encompassing table matches the published ten rows") {
    struct Printed {
        const char* label;
        double p, b_lb, o_l, b_bic, ibf_ref, ibf_jef, ibf_mod;
        int q;
    };
    const Printed printed[10] = {
        {"234c", 0.07082, 0.50970, 0.70192, 0.21582, 0.60776, 0.73697, 0.67515, 1},
        {"13c", 0.00000, 0.00008, 0.00008, 0.00000, 0.00018, 0.00009, 0.00010, 2},
        {"14c", 0.16800, 0.81460, 0.89583, 0.71623, 1.15714, 2.31974, 1.76313, 2},
        {"23c", 0.00018, 0.00414, 0.00414, 0.00001, 0.00586, 0.00335, 0.00386, 2},
        {"24c", 0.00001, 0.00029, 0.00029, 0.00000, 0.00056, 0.00030, 0.00031, 2},
        {"34c", 0.00550, 0.07782, 0.07782, 0.00277, 0.07650, 0.06740, 0.07492, 2},
        {"1c", 0.00000, 0.00016, 0.00016, 0.00000, 0.00030, 0.00014, 0.00014, 3},
        {"2c", 0.00002, 0.00055, 0.00055, 0.00000, 0.00089, 0.00043, 0.00046, 3},
        {"3c", 0.00000, 0.00003, 0.00003, 0.00000, 0.00007, 0.00003, 0.00003, 3},
        {"4c", 0.00002, 0.00061, 0.00061, 0.00000, 0.00096, 0.00047, 0.00050, 3},
    };
    std::vector<EncompassingRow> rows = hald_encompassing_table();
    REQUIRE(rows.size() == 10);
    for (int i = 0; i < 10; ++i) {
        const EncompassingRow& r = rows[i];
        const Printed& w = printed[i];
        CAPTURE(w.label);
        CHECK(r.model_label == w.label);
        CHECK(r.q == w.q);
        CHECK(rounds_to(r.p_value, w.p, 5));
        CHECK(rounds_to(r.b_lb, w.b_lb, 5));
        CHECK(rounds_to(r.o_l, w.o_l, 5));
        CHECK(rounds_to(r.b_bic, w.b_bic, 5));
        CHECK(rounds_to(r.ibf_reference, w.ibf_ref, 5));
        CHECK(rounds_to(r.ibf_jeffreys, w.ibf_jef, 5));
        CHECK(rounds_to(r.ibf_mod_jeffreys, w.ibf_mod, 5));

        // Internal consistency: the odds bound is the plain bound times
        // the clamped stabilizer, and the Schwarz factor is the harshest.
        double g = arlb::cal::stabilizer_g(r.p_value, r.q, 13.0);
        CHECK(std::fabs(r.o_l - r.b_lb * std::max(1.0, g)) <
              1e-12 * std::max(1.0, r.o_l));
        CHECK(r.b_bic < r.b_lb);
        CHECK(r.p_value < std::exp(-1.0));
    }
}
