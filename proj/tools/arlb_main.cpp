// arlb: p-value calibration toolkit.
//
// Subcommands:
//   calibrate  bounds for one (p, n*, q) evidence summary
//   table1     adaptive significance levels against a reference experiment
//   table2     posterior probability bounds for a list of p-values
//   curves     posterior-probability curves for a test scenario
//   hald       encompassing comparison table for the embedded cement data
//   verify     lemma / theorem verification reports
//
// Global options --format, --precision, --output, and --config apply to
// every subcommand. docs/formats.md documents the output schemas, the
// config file format, and the exit codes (0 success, 1 check failure,
// 2 usage error).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arlb/bayes_ref.hpp"
#include "arlb/calibration.hpp"
#include "arlb/consistency.hpp"
#include "arlb/format.hpp"
#include "arlb/linmod.hpp"
#include "arlb/specfun.hpp"

namespace {

using arlb::fmt::CellKind;
using arlb::fmt::Column;
using arlb::fmt::Table;

struct GlobalOptions {
    std::string format = "table";
    int precision = 5;
    std::string output;
};

int g_exit_code = 0;

void emit(const Table& table, const GlobalOptions& g) {
    arlb::fmt::OutputSpec spec;
    spec.format = arlb::fmt::parse_format(g.format);
    spec.precision = g.precision;
    spec.destination = g.output;
    arlb::fmt::write_output(arlb::fmt::render(table, spec.format), spec);
}

double prob_from_bf(double b01) {
    if (!std::isfinite(b01)) return 1.0;
    return b01 / (1.0 + b01);
}

std::vector<double> log_spaced(double lo, double hi, int points) {
    std::vector<double> grid(points);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        grid[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

// ---------------------------------------------------------------- calibrate

struct CalibrateArgs {
    double p = 0.0;
    double n = 0.0;
    int q = 1;
    double n0 = 0.0;
    double alpha0 = 0.0;
    bool has_reference = false;
};

void run_calibrate(const CalibrateArgs& a, const GlobalOptions& g) {
    arlb::cal::CalibrationResult r = arlb::cal::arlb({a.p, a.n, a.q});
    if (!r.rlb_valid)
        std::fprintf(stderr,
                     "warning: p = %g is not below 1/e = 0.367879; the robust "
                     "lower bound does not apply there (rlb_valid = false)\n",
                     a.p);

    Table t;
    t.columns = {{"p", CellKind::number},       {"n_star", CellKind::number},
                 {"q", CellKind::number},       {"b_l", CellKind::number},
                 {"g", CellKind::number},       {"o_l", CellKind::number},
                 {"p_l", CellKind::number},     {"rlb_valid", CellKind::boolean}};
    std::vector<std::string> row = {
        arlb::fmt::fixed(a.p, g.precision),   arlb::fmt::fixed(a.n, g.precision),
        arlb::fmt::integer(a.q),              arlb::fmt::fixed(r.b_l, g.precision),
        arlb::fmt::fixed(r.g, g.precision),   arlb::fmt::fixed(r.o_l, g.precision),
        arlb::fmt::fixed(r.p_l, g.precision), arlb::fmt::boolean(r.rlb_valid)};
    if (a.has_reference) {
        double alpha_n = arlb::cal::adaptive_alpha_reference({a.n0, a.alpha0}, a.n);
        t.columns.push_back({"alpha_n", CellKind::number});
        row.push_back(arlb::fmt::fixed(alpha_n, g.precision));
    }
    t.rows.push_back(std::move(row));
    emit(t, g);
}

// ------------------------------------------------------------ table1/table2

void run_table1(double n0, double alpha0, const std::vector<long>& n_list,
                const GlobalOptions& g) {
    Table t;
    t.columns = {{"n", CellKind::number}, {"alpha_n", CellKind::number}};
    for (long n : n_list) {
        double a = arlb::cal::adaptive_alpha_reference({n0, alpha0},
                                                       static_cast<double>(n));
        t.rows.push_back({arlb::fmt::integer(n), arlb::fmt::fixed(a, g.precision)});
    }
    emit(t, g);
}

void run_table2(const std::vector<double>& p_list, const GlobalOptions& g) {
    Table t;
    t.columns = {{"p", CellKind::number}, {"p_h0_lb", CellKind::number}};
    for (double p : p_list) {
        double bound = arlb::cal::posterior_prob_bound(p);
        t.rows.push_back({arlb::fmt::fixed(p, g.precision),
                          arlb::fmt::fixed(bound, g.precision)});
    }
    emit(t, g);
}

// -------------------------------------------------------------------- curves

struct CurvesArgs {
    std::string scenario;
    int n = 50;
    double p_min = 1e-4;
    double p_max = 0.05;
    int points = 50;
    int k = 4;
    int k1 = 3;
};

void run_curves(const CurvesArgs& a, const GlobalOptions& g) {
    if (!(a.p_min > 0.0 && a.p_min < a.p_max && a.p_max < 1.0))
        throw CLI::ValidationError("--p-min/--p-max",
                                   "require 0 < p-min < p-max < 1");
    std::vector<double> grid = log_spaced(a.p_min, a.p_max, a.points);
    const int prec = g.precision;
    auto cell = [prec](double x) { return arlb::fmt::sci(x, prec); };
    Table t;

    if (a.scenario == "normal-known") {
        t.columns = {{"p", CellKind::number},        {"p_h0_k1", CellKind::number},
                     {"p_h0_k2", CellKind::number},  {"p_h0_rlb", CellKind::number},
                     {"p_h0_arlb", CellKind::number},{"p_h0_bic", CellKind::number}};
        for (double p : grid) {
            double z = -arlb::specfun::normal_quantile(p / 2.0);  // two-sided
            double b1 = arlb::bayes::bf_normal_known_var({z, a.n, 1.0});
            double b2 = arlb::bayes::bf_normal_known_var({z, a.n, 2.0});
            // Schwarz approximation with -2 log LR = z^2 and one parameter.
            double bic = std::sqrt(static_cast<double>(a.n)) * std::exp(-0.5 * z * z);
            t.rows.push_back({cell(p), cell(prob_from_bf(b1)), cell(prob_from_bf(b2)),
                              cell(arlb::cal::posterior_prob_bound(p)),
                              cell(arlb::cal::arlb({p, double(a.n), 1}).p_l),
                              cell(prob_from_bf(bic))});
        }
    } else if (a.scenario == "normal-unknown") {
        if (a.n < 3)
            throw CLI::ValidationError("--n", "normal-unknown requires n >= 3");
        t.columns = {{"p", CellKind::number},
                     {"p_h0_intrinsic", CellKind::number},
                     {"p_h0_robust", CellKind::number},
                     {"p_h0_rlb", CellKind::number},
                     {"p_h0_arlb", CellKind::number},
                     {"p_h0_bic", CellKind::number}};
        for (double p : grid) {
            double tt = arlb::specfun::t_quantile(p / 2.0, a.n - 1.0);  // two-sided
            double bi = arlb::bayes::bf_normal_intrinsic_approx({tt, a.n});
            double br = arlb::bayes::bf_normal_robust_prior({tt, a.n});
            double bic = arlb::bayes::bf_bic(1.0 + tt * tt / (a.n - 1.0), 1.0, a.n, 1);
            t.rows.push_back({cell(p), cell(prob_from_bf(bi)), cell(prob_from_bf(br)),
                              cell(arlb::cal::posterior_prob_bound(p)),
                              cell(arlb::cal::arlb({p, double(a.n), 1}).p_l),
                              cell(prob_from_bf(bic))});
        }
    } else if (a.scenario == "exponential") {
        t.columns = {{"p", CellKind::number},
                     {"p_h0_intrinsic_lower", CellKind::number},
                     {"p_h0_intrinsic_upper", CellKind::number},
                     {"p_h0_rlb", CellKind::number},
                     {"p_h0_arlb", CellKind::number},
                     {"p_h0_bic", CellKind::number}};
        for (double p : grid) {
            // B01 depends on lambda0 * xbar only; evaluate at lambda0 = 1.
            double xlo = arlb::bayes::lr_pvalue_to_xbar_exponential(
                p, a.n, 1.0, arlb::bayes::Branch::lower);
            double xhi = arlb::bayes::lr_pvalue_to_xbar_exponential(
                p, a.n, 1.0, arlb::bayes::Branch::upper);
            double blo = arlb::bayes::bf_exponential_intrinsic({xlo, a.n, 1.0});
            double bhi = arlb::bayes::bf_exponential_intrinsic({xhi, a.n, 1.0});
            double lam = arlb::specfun::chi2_quantile(p, 1.0);
            double bic = std::sqrt(static_cast<double>(a.n)) * std::exp(-0.5 * lam);
            t.rows.push_back({cell(p), cell(prob_from_bf(blo)), cell(prob_from_bf(bhi)),
                              cell(arlb::cal::posterior_prob_bound(p)),
                              cell(arlb::cal::arlb({p, double(a.n), 1}).p_l),
                              cell(prob_from_bf(bic))});
        }
    } else {  // linear
        if (a.k < 1 || a.k1 < 0 || a.k1 >= a.k)
            throw CLI::ValidationError("--k/--k1", "require 0 <= k1 < k");
        if (a.n < a.k + 2)
            throw CLI::ValidationError("--n", "linear requires n >= k + 2");
        int q = a.k - a.k1;
        int df2 = a.n - a.k - 1;
        t.columns = {{"p", CellKind::number},
                     {"p_h0_ibf_reference", CellKind::number},
                     {"p_h0_ibf_jeffreys", CellKind::number},
                     {"p_h0_ibf_mod_jeffreys", CellKind::number},
                     {"p_h0_bic", CellKind::number},
                     {"p_h0_rlb", CellKind::number},
                     {"p_h0_arlb", CellKind::number}};
        for (double p : grid) {
            double f = arlb::specfun::f_quantile(p, q, df2);
            double b_ratio = 1.0 + q * f / df2;
            std::vector<double> ibf(3);
            const arlb::bayes::GironPreset presets[3] = {
                arlb::bayes::GironPreset::reference,
                arlb::bayes::GironPreset::jeffreys,
                arlb::bayes::GironPreset::modified_jeffreys};
            for (int i = 0; i < 3; ++i) {
                int q0 = 0, q1 = 0;
                arlb::bayes::giron_preset_exponents(presets[i], a.k, a.k1, q0, q1);
                ibf[i] = arlb::bayes::bf_nested_linear_giron(
                    {a.n, a.k, a.k1, q0, q1, b_ratio});
            }
            double bic = arlb::bayes::bf_bic(b_ratio, 1.0, a.n, q);
            t.rows.push_back({cell(p), cell(prob_from_bf(ibf[0])),
                              cell(prob_from_bf(ibf[1])), cell(prob_from_bf(ibf[2])),
                              cell(prob_from_bf(bic)),
                              cell(arlb::cal::posterior_prob_bound(p)),
                              cell(arlb::cal::arlb({p, double(a.n), q}).p_l)});
        }
    }
    emit(t, g);
}

// ---------------------------------------------------------------------- hald

struct PrintedHaldRow {
    const char* label;
    double p, b_lb, o_l, b_bic, ibf_ref, ibf_jef, ibf_mod;
};

// The comparison table as printed in the source analysis of the cement data.
const PrintedHaldRow kPrintedHald[10] = {
    {"234c", 0.07082, 0.50970, 0.70192, 0.21582, 0.60776, 0.73697, 0.67515},
    {"13c", 0.00000, 0.00008, 0.00008, 0.00000, 0.00018, 0.00009, 0.00010},
    {"14c", 0.16800, 0.81460, 0.89583, 0.71623, 1.15714, 2.31974, 1.76313},
    {"23c", 0.00018, 0.00414, 0.00414, 0.00001, 0.00586, 0.00335, 0.00386},
    {"24c", 0.00001, 0.00029, 0.00029, 0.00000, 0.00056, 0.00030, 0.00031},
    {"34c", 0.00550, 0.07782, 0.07782, 0.00277, 0.07650, 0.06740, 0.07492},
    {"1c", 0.00000, 0.00016, 0.00016, 0.00000, 0.00030, 0.00014, 0.00014},
    {"2c", 0.00002, 0.00055, 0.00055, 0.00000, 0.00089, 0.00043, 0.00046},
    {"3c", 0.00000, 0.00003, 0.00003, 0.00000, 0.00007, 0.00003, 0.00003},
    {"4c", 0.00002, 0.00061, 0.00061, 0.00000, 0.00096, 0.00047, 0.00050},
};

// Rounding-equality check: both sides formatted to `decimals` places.
bool rounds_to(double computed, double printed, int decimals) {
    return arlb::fmt::fixed(computed, decimals) == arlb::fmt::fixed(printed, decimals);
}

void run_hald(bool check, bool dump_data, const GlobalOptions& g) {
    if (dump_data) {
        arlb::fmt::OutputSpec spec;
        spec.destination = g.output;
        arlb::fmt::write_output(arlb::linmod::hald_csv(), spec);
        return;
    }

    std::vector<arlb::linmod::EncompassingRow> rows =
        arlb::linmod::hald_encompassing_table();

    if (!check) {
        Table t;
        t.columns = {{"model", CellKind::text},
                     {"p_value", CellKind::number},
                     {"q", CellKind::number},
                     {"b_lb", CellKind::number},
                     {"o_l", CellKind::number},
                     {"b_bic", CellKind::number},
                     {"ibf_reference", CellKind::number},
                     {"ibf_jeffreys", CellKind::number},
                     {"ibf_mod_jeffreys", CellKind::number}};
        for (const auto& r : rows)
            t.rows.push_back({r.model_label,
                              arlb::fmt::fixed(r.p_value, g.precision),
                              arlb::fmt::integer(r.q),
                              arlb::fmt::fixed(r.b_lb, g.precision),
                              arlb::fmt::fixed(r.o_l, g.precision),
                              arlb::fmt::fixed(r.b_bic, g.precision),
                              arlb::fmt::fixed(r.ibf_reference, g.precision),
                              arlb::fmt::fixed(r.ibf_jeffreys, g.precision),
                              arlb::fmt::fixed(r.ibf_mod_jeffreys, g.precision)});
        emit(t, g);
        return;
    }

    // Per-cell comparison against the printed table. Exact-value cells
    // (p at 5 decimals, b_lb / o_l / b_bic at 4) drive the exit code; the
    // quadrature-based ibf_* cells are reported informationally with a 25%
    // relative guideline for cells above 0.01.
    Table t;
    t.columns = {{"model", CellKind::text},    {"column", CellKind::text},
                 {"computed", CellKind::number}, {"printed", CellKind::number},
                 {"delta", CellKind::number},  {"status", CellKind::text}};
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& e = kPrintedHald[i];
        struct Cell {
            const char* name;
            double computed, printed;
            int decimals;  // 0 = informational ibf cell
        };
        const Cell cells[7] = {
            {"p_value", r.p_value, e.p, 5},
            {"b_lb", r.b_lb, e.b_lb, 4},
            {"o_l", r.o_l, e.o_l, 4},
            {"b_bic", r.b_bic, e.b_bic, 4},
            {"ibf_reference", r.ibf_reference, e.ibf_ref, 0},
            {"ibf_jeffreys", r.ibf_jeffreys, e.ibf_jef, 0},
            {"ibf_mod_jeffreys", r.ibf_mod_jeffreys, e.ibf_mod, 0},
        };
        for (const Cell& c : cells) {
            std::string status;
            if (c.decimals > 0) {
                bool pass = rounds_to(c.computed, c.printed, c.decimals);
                status = pass ? "ok" : "FAIL";
                if (!pass) ok = false;
            } else if (c.printed > 0.01) {
                double rel = std::fabs(c.computed - c.printed) / c.printed;
                status = rel <= 0.25 ? "ibf_ok" : "ibf_large";
            } else {
                status = "ibf_small";
            }
            t.rows.push_back({r.model_label, c.name,
                              arlb::fmt::fixed(c.computed, g.precision),
                              arlb::fmt::fixed(c.printed, g.precision),
                              arlb::fmt::sci(c.computed - c.printed, 2), status});
        }
    }
    emit(t, g);
    std::fprintf(stderr, "hald --check: %s\n", ok ? "PASS" : "FAIL");
    if (!ok) g_exit_code = 1;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
    int lemma = 0;    // 0 = unset
    int theorem = 0;  // 0 = unset
    long samples = 100000;
    long reps = 10000;
    std::vector<double> n_grid;
    double delta = 0.5;
    double w = 1.0;
    double pl_threshold = 0.01;
    std::uint64_t seed = 42;
    double n_star = 100.0;
    int q = 1;
    double alpha = 0.05;
    std::vector<double> p_grid;
};

void report_status(const char* what, bool passed) {
    std::fprintf(stderr, "%s: %s\n", what, passed ? "PASS" : "FAIL");
    if (!passed) g_exit_code = 1;
}

void run_verify_lemma(const VerifyArgs& a, const GlobalOptions& g) {
    arlb::consistency::LemmaReport rep =
        a.lemma == 1 ? arlb::consistency::check_lemma1(a.samples, a.seed)
                     : arlb::consistency::check_lemma2(a.samples, a.seed);
    Table t;
    t.columns = {{"samples", CellKind::number},
                 {"violations", CellKind::number},
                 {"passed", CellKind::boolean}};
    t.rows.push_back({arlb::fmt::integer(rep.samples),
                      arlb::fmt::integer(rep.violations),
                      arlb::fmt::boolean(rep.passed)});
    emit(t, g);
    report_status(a.lemma == 1 ? "lemma 1" : "lemma 2", rep.passed);
}

// Self-calibration diagnostic: B_L(alpha_n*(q)) * g_q(n*) along an n* scan,
// recording the limit value 1 it approaches from below.
void run_verify_theorem1(const VerifyArgs& a, const GlobalOptions& g) {
    std::vector<double> grid = a.n_grid;
    if (grid.empty()) grid = {1e4, 1e6, 1e8, 1e10, 1e12};
    Table t;
    t.columns = {{"n_star", CellKind::number},
                 {"product", CellKind::number},
                 {"limit", CellKind::number}};
    bool passed = true;
    double prev_gap = -1.0;
    double last = 0.0;
    for (double n : grid) {
        double v = arlb::cal::arlb_self_calibration_limit(a.alpha, a.q, n);
        double gap = std::fabs(v - 1.0);
        if (prev_gap >= 0.0 && gap >= prev_gap) passed = false;
        prev_gap = gap;
        last = v;
        t.rows.push_back({arlb::fmt::sci(n, g.precision),
                          arlb::fmt::fixed(v, g.precision),
                          arlb::fmt::fixed(1.0, g.precision)});
    }
    if (std::fabs(last - 1.0) > 0.1) passed = false;
    emit(t, g);
    report_status("theorem 1", passed);
}

void run_verify_theorem2(const VerifyArgs& a, const GlobalOptions& g) {
    arlb::consistency::SimulationConfig cfg;
    cfg.reps = a.reps;
    cfg.delta = a.delta;
    cfg.w_threshold = a.w;
    cfg.pl_threshold = a.pl_threshold;
    cfg.seed = a.seed;
    if (!a.n_grid.empty()) {
        cfg.n_grid.clear();
        for (double n : a.n_grid) cfg.n_grid.push_back(static_cast<long>(n));
    }
    arlb::consistency::Theorem2Report rep = arlb::consistency::verify_theorem2(cfg);
    Table t;
    t.columns = {{"n", CellKind::number},         {"regime", CellKind::text},
                 {"W", CellKind::number},         {"empirical_prob", CellKind::number},
                 {"analytic_bound", CellKind::number}, {"mc_stderr", CellKind::number}};
    for (const auto& r : rep.rows)
        t.rows.push_back({arlb::fmt::integer(r.n), r.regime,
                          arlb::fmt::fixed(r.threshold, g.precision),
                          arlb::fmt::sci(r.empirical_prob, g.precision),
                          r.has_bound ? arlb::fmt::sci(r.analytic_bound, g.precision)
                                      : std::string{},
                          arlb::fmt::sci(r.mc_stderr, g.precision)});
    emit(t, g);
    report_status("theorem 2", rep.passed);
}

void run_verify_theorem3(const VerifyArgs& a, const GlobalOptions& g) {
    std::vector<double> grid = a.p_grid;
    if (grid.empty())
        for (int k = 2; k <= 15; ++k) grid.push_back(std::pow(10.0, -k));
    arlb::consistency::Theorem3Report rep =
        arlb::consistency::verify_theorem3(a.n_star, a.q, grid);
    Table t;
    t.columns = {{"p", CellKind::number}, {"o_l", CellKind::number}};
    for (const auto& r : rep.rows)
        t.rows.push_back({arlb::fmt::sci(r.p, g.precision),
                          arlb::fmt::sci(r.o_l, g.precision)});
    emit(t, g);
    report_status("theorem 3", rep.passed);
}

void run_verify(const VerifyArgs& a, const GlobalOptions& g) {
    if (a.lemma == 0 && a.theorem == 0)
        throw CLI::ValidationError("verify",
                                   "one of --lemma or --theorem is required");
    if (a.lemma != 0)
        run_verify_lemma(a, g);
    else if (a.theorem == 1)
        run_verify_theorem1(a, g);
    else if (a.theorem == 2)
        run_verify_theorem2(a, g);
    else
        run_verify_theorem3(a, g);
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    CLI::App app{"adaptive robust lower-bound calibration toolkit"};
    app.require_subcommand(1);
    app.set_config("--config")
        ->description("key=value config file mirroring the flags; "
                      "command-line flags take precedence");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}))
        ->capture_default_str();
    app.add_option("--precision", g.precision, "decimal places")
        ->check(CLI::Range(1, 15))
        ->capture_default_str();
    app.add_option("--output", g.output,
                   "output file (default stdout; relative paths resolve "
                   "against ARLB_OUTPUT_DIR when set)");

    auto in_open_unit = CLI::Validator(
        [](std::string& s) {
            try {
                double v = std::stod(s);
                if (v > 0.0 && v < 1.0) return std::string{};
            } catch (...) {
            }
            return std::string{"value must be in (0,1)"};
        },
        "FLOAT in (0,1)");
    auto ge_one = CLI::Validator(
        [](std::string& s) {
            try {
                if (std::stod(s) >= 1.0) return std::string{};
            } catch (...) {
            }
            return std::string{"value must be >= 1"};
        },
        "FLOAT >= 1");

    // calibrate
    CalibrateArgs cal_args;
    CLI::App* cal = app.add_subcommand(
        "calibrate", "robust lower bound and adaptive odds for one p-value");
    cal->fallthrough();
    cal->add_option("--p", cal_args.p, "observed p-value")
        ->required()
        ->check(in_open_unit);
    cal->add_option("--n", cal_args.n, "effective sample size n*")
        ->required()
        ->check(ge_one);
    cal->add_option("--q", cal_args.q, "dimension difference")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* opt_n0 =
        cal->add_option("--n0", cal_args.n0, "reference sample size")->check(ge_one);
    CLI::Option* opt_a0 = cal->add_option("--alpha0", cal_args.alpha0,
                                          "reference significance level")
                              ->check(in_open_unit);
    opt_n0->needs(opt_a0);
    opt_a0->needs(opt_n0);
    cal->callback([&]() {
        cal_args.has_reference = opt_n0->count() > 0;
        run_calibrate(cal_args, g);
    });

    // table1
    double t1_n0 = 10.0, t1_alpha0 = 0.05;
    std::vector<long> t1_n_list = {10, 50, 100, 500, 1000, 10000};
    CLI::App* t1 = app.add_subcommand(
        "table1", "adaptive significance levels for a reference experiment");
    t1->fallthrough();
    t1->add_option("--n0", t1_n0, "reference sample size")
        ->check(ge_one)
        ->capture_default_str();
    t1->add_option("--alpha0", t1_alpha0, "reference significance level")
        ->check(in_open_unit)
        ->capture_default_str();
    t1->add_option("--n-list", t1_n_list, "sample sizes")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    t1->callback([&]() { run_table1(t1_n0, t1_alpha0, t1_n_list, g); });

    // table2
    std::vector<double> t2_p_list = {0.05, 0.01, 0.005, 0.001, 0.0005, 0.0001};
    CLI::App* t2 = app.add_subcommand(
        "table2", "posterior probability bounds for a list of p-values");
    t2->fallthrough();
    t2->add_option("--p-list", t2_p_list, "p-values")
        ->delimiter(',')
        ->check(in_open_unit);
    t2->callback([&]() { run_table2(t2_p_list, g); });

    // curves
    CurvesArgs cur;
    CLI::App* cv = app.add_subcommand(
        "curves", "posterior-probability curves over a log-spaced p grid");
    cv->fallthrough();
    cv->add_option("--scenario", cur.scenario, "test scenario")
        ->required()
        ->check(CLI::IsMember(
            {"normal-known", "normal-unknown", "exponential", "linear"}));
    cv->add_option("--n", cur.n, "sample size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cv->add_option("--p-min", cur.p_min, "smallest p")
        ->check(in_open_unit)
        ->capture_default_str();
    cv->add_option("--p-max", cur.p_max, "largest p")
        ->check(in_open_unit)
        ->capture_default_str();
    cv->add_option("--points", cur.points, "grid size")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    cv->add_option("--k", cur.k, "full-model regressors (linear)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cv->add_option("--k1", cur.k1, "reduced-model regressors (linear)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cv->callback([&]() { run_curves(cur, g); });

    // hald
    bool hald_check = false, hald_dump = false;
    CLI::App* hd = app.add_subcommand(
        "hald", "encompassing comparison table for the cement data");
    hd->fallthrough();
    hd->add_flag("--check", hald_check,
                 "compare against the published table and report deviations");
    hd->add_flag("--dump-data", hald_dump, "print the embedded dataset as CSV");
    hd->callback([&]() { run_hald(hald_check, hald_dump, g); });

    // verify
    VerifyArgs va;
    CLI::App* vf =
        app.add_subcommand("verify", "lemma / theorem verification reports");
    vf->fallthrough();
    CLI::Option* opt_lemma = vf->add_option("--lemma", va.lemma, "lemma number")
                                 ->check(CLI::IsMember({1, 2}));
    CLI::Option* opt_theorem =
        vf->add_option("--theorem", va.theorem, "theorem number")
            ->check(CLI::IsMember({1, 2, 3}));
    opt_lemma->excludes(opt_theorem);
    opt_theorem->excludes(opt_lemma);
    vf->add_option("--samples", va.samples, "draws for the lemma checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vf->add_option("--reps", va.reps, "Monte Carlo repetitions per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vf->add_option("--n-grid", va.n_grid,
                   "sample sizes (theorem 2) or n* scan (theorem 1)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    vf->add_option("--delta", va.delta, "standardized effect under H1")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    vf->add_option("--w", va.w, "odds threshold W")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vf->add_option("--pl-threshold", va.pl_threshold,
                   "P_L threshold for the alternative side")
        ->check(in_open_unit)
        ->capture_default_str();
    vf->add_option("--seed", va.seed, "RNG seed")->capture_default_str();
    vf->add_option("--n-star", va.n_star, "effective sample size (theorems 1, 3)")
        ->check(ge_one)
        ->capture_default_str();
    vf->add_option("--q", va.q, "dimension difference (theorems 1, 3)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vf->add_option("--alpha", va.alpha, "significance level (theorem 1)")
        ->check(in_open_unit)
        ->capture_default_str();
    vf->add_option("--p-grid", va.p_grid, "decreasing p grid (theorem 3)")
        ->delimiter(',')
        ->check(in_open_unit);
    vf->callback([&]() { run_verify(va, g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return g_exit_code;
}
