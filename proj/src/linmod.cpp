#include "arlb/linmod.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "arlb/bayes_ref.hpp"
#include "arlb/calibration.hpp"
#include "arlb/specfun.hpp"

namespace arlb::linmod {

namespace {

constexpr int kHaldN = 13;

constexpr double kHaldY[kHaldN] = {78.5,  74.3,  104.3, 87.6, 95.9,  109.2, 102.7,
                                   72.5,  93.1,  115.9, 83.8, 113.3, 109.4};

constexpr double kHaldX[kHaldN][4] = {
    {7, 26, 6, 60},  {1, 29, 15, 52}, {11, 56, 8, 20}, {11, 31, 8, 47},
    {7, 52, 6, 33},  {11, 55, 9, 22}, {3, 71, 17, 6},  {1, 31, 22, 44},
    {2, 54, 18, 22}, {21, 47, 4, 26}, {1, 40, 23, 34}, {11, 66, 9, 12},
    {10, 68, 8, 12}};

// The ten subsets of the encompassing comparison, in presentation order.
const std::vector<std::vector<int>> kHaldSubsets = {
    {2, 3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1}, {2}, {3}, {4}};

std::string subset_label(const std::vector<int>& subset) {
    std::string label;
    for (int j : subset) label += static_cast<char>('0' + j);
    return label + "c";
}

} // namespace

const Dataset& hald_dataset() {
    static const Dataset data = [] {
        Dataset d;
        d.y.resize(kHaldN);
        d.X.resize(kHaldN, 4);
        for (int i = 0; i < kHaldN; ++i) {
            d.y(i) = kHaldY[i];
            for (int j = 0; j < 4; ++j) d.X(i, j) = kHaldX[i][j];
        }
        d.column_labels = {"x1", "x2", "x3", "x4"};
        return d;
    }();
    return data;
}

std::string hald_csv() {
    std::string out = "y,x1,x2,x3,x4\n";
    char line[128];
    for (int i = 0; i < kHaldN; ++i) {
        std::snprintf(line, sizeof(line), "%.1f,%d,%d,%d,%d\n", kHaldY[i],
                      static_cast<int>(kHaldX[i][0]), static_cast<int>(kHaldX[i][1]),
                      static_cast<int>(kHaldX[i][2]), static_cast<int>(kHaldX[i][3]));
        out += line;
    }
    return out;
}

FitResult fit_ols(const Dataset& data, const std::vector<int>& subset) {
    const int n = static_cast<int>(data.y.size());
    const int m = static_cast<int>(subset.size());
    if (n <= m + 1) throw std::domain_error("fit_ols: need n > regressors + 1");
    Eigen::MatrixXd design(n, m + 1);
    design.col(0).setOnes();
    for (int j = 0; j < m; ++j) {
        const int col = subset[j] - 1;  // 1-based, matching x1..xk labels
        if (col < 0 || col >= data.X.cols()) {
            throw std::domain_error("fit_ols: regressor index out of range");
        }
        design.col(j + 1) = data.X.col(col);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols()) throw std::domain_error("fit_ols: design is rank deficient");
    FitResult fit;
    fit.coefficients = qr.solve(data.y);
    fit.rss = (data.y - design * fit.coefficients).squaredNorm();
    fit.df_resid = n - (m + 1);
    return fit;
}

FTestResult f_test_nested(const FitResult& full, const FitResult& reduced, int n) {
    const int q = reduced.df_resid - full.df_resid;
    if (q < 1) throw std::domain_error("f_test_nested: models are not nested (q < 1)");
    if (reduced.rss < full.rss) {
        throw std::domain_error("f_test_nested: reduced model fits better than full");
    }
    if (n - 1 < reduced.df_resid) throw std::domain_error("f_test_nested: n inconsistent");
    FTestResult r;
    r.f_stat = ((reduced.rss - full.rss) / q) / (full.rss / full.df_resid);
    r.p_value = specfun::f_sf(r.f_stat, q, full.df_resid);
    return r;
}

std::vector<EncompassingRow> hald_encompassing_table() {
    const Dataset& data = hald_dataset();
    const FitResult full = fit_ols(data, {1, 2, 3, 4});
    std::vector<EncompassingRow> rows;
    rows.reserve(kHaldSubsets.size());
    for (const auto& subset : kHaldSubsets) {
        const FitResult reduced = fit_ols(data, subset);
        const FTestResult test = f_test_nested(full, reduced, kHaldN);
        const int q = 4 - static_cast<int>(subset.size());
        EncompassingRow row;
        row.model_label = subset_label(subset);
        row.p_value = test.p_value;
        row.q = q;
        const cal::CalibrationResult c = cal::arlb({test.p_value, kHaldN, q});
        row.b_lb = c.b_l;
        row.o_l = c.o_l;
        row.b_bic = bayes::bf_bic(reduced.rss, full.rss, kHaldN, q);
        bayes::NestedLinearComparison cmp;
        cmp.n = kHaldN;
        cmp.k = 4;
        cmp.k1 = static_cast<int>(subset.size());
        cmp.b_ratio = reduced.rss / full.rss;
        using P = bayes::GironPreset;
        for (const P preset : {P::reference, P::jeffreys, P::modified_jeffreys}) {
            bayes::giron_preset_exponents(preset, cmp.k, cmp.k1, cmp.q0, cmp.q1);
            const double b01 = bayes::bf_nested_linear_giron(cmp);
            if (preset == P::reference) row.ibf_reference = b01;
            if (preset == P::jeffreys) row.ibf_jeffreys = b01;
            if (preset == P::modified_jeffreys) row.ibf_mod_jeffreys = b01;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace arlb::linmod
