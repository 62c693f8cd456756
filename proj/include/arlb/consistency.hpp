#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Monte Carlo and analytic verification of the calibration's consistency
// properties, built on a documented, seedable, splittable generator so that
// reports are bit-identical for a given seed regardless of scheduling.

namespace arlb::consistency {

// SplitMix64: state advances by the golden-gamma constant; output is the
// finalizer mix of the new state. Any 64-bit value is a valid seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();

    // Uniform double in the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
    double next_double();
};

// The SplitMix64 output finalizer applied to z, used as the documented
// stream-splitting rule (see derive_subseed / derive_run_seed).
std::uint64_t mix64(std::uint64_t z);

// Chunk j of a run draws from SplitMix64(derive_subseed(run_seed, j)) with
// derive_subseed(s, j) = mix64(s + (j + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_subseed(std::uint64_t run_seed, std::uint64_t chunk_index);

// Each (n, regime) pair of a simulation gets its own stream:
// run_seed = mix64(mix64(seed) ^ mix64(n) ^ tag), tag 0 for the null regime
// and 1 for the alternative.
std::uint64_t derive_run_seed(std::uint64_t seed, std::uint64_t n, bool alternative);

struct SimulationConfig {
    long reps = 10000;
    std::vector<long> n_grid = {100, 1000, 10000};
    double delta = 0.5;          // standardized effect under the alternative
    double w_threshold = 1.0;    // odds threshold W
    double pl_threshold = 0.01;  // posterior-bound threshold for the alternative side
    std::uint64_t seed = 42;
};

// One draw: z ~ Normal(sqrt(n) delta, 1), p = 1 - Phi(z). Underflowing
// tails are clamped into (0,1) at the smallest normal double. Under
// delta = 0 the output is uniform.
double simulate_pvalue(double delta, long n, SplitMix64& rng);

struct Theorem2Row {
    long n;
    std::string regime;  // "null" or "alt"
    double threshold;    // W for null rows, the P_L threshold for alt rows
    double empirical_prob;
    double analytic_bound;  // null rows only
    bool has_bound;
    double mc_stderr;
};

struct Theorem2Report {
    std::vector<Theorem2Row> rows;
    bool passed;
};

// Null side: frequency of O_L <= W among draws in the bound's validity
// domain p < 1/e, against the analytic bound (W/e) sqrt(ln n / n).
// Alternative side: frequency of P_L >= pl_threshold at effect delta.
// Pass requires, per n: null frequency <= bound + 3 stderr; the null
// frequencies non-increasing in n within 2 stderr; and at the largest n the
// alternative frequency <= pl_threshold.
Theorem2Report verify_theorem2(const SimulationConfig& cfg);

struct Theorem3Row {
    double p;
    double o_l;
};

struct Theorem3Report {
    std::vector<Theorem3Row> rows;
    bool passed;  // strictly decreasing O_L along the decreasing p grid
};

Theorem3Report verify_theorem3(double n_star, int q, const std::vector<double>& p_grid);

struct LemmaReport {
    long samples;
    long violations;
    bool passed;
};

// B_L(p) >= e p > p on (0, 1/e), sampled uniformly plus the stated
// endpoint-adjacent probes.
LemmaReport check_lemma1(long samples, std::uint64_t seed);

// Phi^-1(1-p) < sqrt(-2 ln p) on (1e-12, 0.345), sampled uniformly.
LemmaReport check_lemma2(long samples, std::uint64_t seed);

struct KsReport {
    long samples;
    double statistic;
    double critical;  // 1.9494746035043753 / sqrt(samples), level 0.001
    bool passed;
};

// Kolmogorov-Smirnov uniformity of simulate_pvalue under delta = 0.
KsReport check_null_uniformity(long samples, std::uint64_t seed);

} // namespace arlb::consistency
