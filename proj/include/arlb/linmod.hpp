#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

// Ordinary least squares with nested-model F tests, plus the embedded Hald
// cement dataset and the encompassing comparison table built from it.

namespace arlb::linmod {

struct Dataset {
    Eigen::VectorXd y;
    Eigen::MatrixXd X;  // n x k regressors; the fitter prepends an intercept
    std::vector<std::string> column_labels;
};

struct FitResult {
    Eigen::VectorXd coefficients;  // intercept first
    double rss;
    int df_resid;  // n - (regressors + 1)
};

struct FTestResult {
    double f_stat;
    double p_value;
};

struct EncompassingRow {
    std::string model_label;  // e.g. "234c" = regressors {2,3,4} + intercept
    double p_value;
    int q;  // dropped-regressor count
    double b_lb;
    double o_l;
    double b_bic;
    double ibf_reference;
    double ibf_jeffreys;
    double ibf_mod_jeffreys;
};

// Hald cement data: 13 observations, response y, regressors x1..x4.
const Dataset& hald_dataset();

// The same data as CSV text (header y,x1,x2,x3,x4).
std::string hald_csv();

// Least squares of y on the intercept plus the 1-based regressor subset
// (empty = intercept only), via Householder QR.
FitResult fit_ols(const Dataset& data, const std::vector<int>& subset);

// F test of the reduced model against the full model it is nested in.
FTestResult f_test_nested(const FitResult& full, const FitResult& reduced, int n);

// The ten-row encompassing table: every named regressor subset against the
// full Hald model, with the calibration bounds (n* = 13), the BIC factor,
// and the three intrinsic-Bayes-factor presets, all reported as B01.
std::vector<EncompassingRow> hald_encompassing_table();

} // namespace arlb::linmod
