#include "arlb/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "arlb/calibration.hpp"
#include "arlb/specfun.hpp"

namespace arlb::consistency {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr long kChunkSize = 4096;

// Counts of the monitored event in one chunk of draws.
struct ChunkCounts {
    long event = 0;
    long total = 0;
};

template <typename EventFn>
ChunkCounts run_chunk(std::uint64_t subseed, long draws, double delta, long n,
                      const EventFn& event) {
    SplitMix64 rng(subseed);
    ChunkCounts c;
    for (long i = 0; i < draws; ++i) {
        const double p = simulate_pvalue(delta, n, rng);
        c.total += 1;
        c.event += event(p) ? 1 : 0;
    }
    return c;
}

// Chunked, order-independent Monte Carlo frequency: counts are summed over
// fixed-size chunks with derived sub-seeds, so the result does not depend
// on scheduling.
template <typename EventFn>
double mc_frequency(std::uint64_t run_seed, long reps, double delta, long n,
                    const EventFn& event) {
    const long chunks = (reps + kChunkSize - 1) / kChunkSize;
    constexpr long kWave = 32;  // bounded fan-out; totals are order-independent
    long event_count = 0, total = 0;
    for (long base = 0; base < chunks; base += kWave) {
        const long end = std::min(chunks, base + kWave);
        std::vector<std::future<ChunkCounts>> futures;
        futures.reserve(end - base);
        for (long j = base; j < end; ++j) {
            const std::uint64_t subseed = derive_subseed(run_seed, static_cast<std::uint64_t>(j));
            const long draws = std::min(kChunkSize, reps - j * kChunkSize);
            futures.push_back(std::async(std::launch::async, [subseed, draws, delta, n, &event] {
                return run_chunk(subseed, draws, delta, n, event);
            }));
        }
        for (auto& f : futures) {
            const ChunkCounts c = f.get();
            event_count += c.event;
            total += c.total;
        }
    }
    return static_cast<double>(event_count) / static_cast<double>(total);
}

double mc_stderr_of(double p_hat, long reps) {
    return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(reps));
}

} // namespace

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t SplitMix64::next() {
    state += kGamma;
    return mix64(state);
}

double SplitMix64::next_double() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t derive_subseed(std::uint64_t run_seed, std::uint64_t chunk_index) {
    return mix64(run_seed + (chunk_index + 1) * kGamma);
}

std::uint64_t derive_run_seed(std::uint64_t seed, std::uint64_t n, bool alternative) {
    return mix64(mix64(seed) ^ mix64(n) ^ (alternative ? 1ull : 0ull));
}

double simulate_pvalue(double delta, long n, SplitMix64& rng) {
    if (delta < 0.0) throw std::domain_error("simulate_pvalue: delta must be >= 0");
    if (n < 1) throw std::domain_error("simulate_pvalue: n must be >= 1");
    const double z = std::sqrt(static_cast<double>(n)) * delta + specfun::normal_quantile(rng.next_double());
    double p = specfun::normal_sf(z);
    // Smallest normal double, so downstream halving (chi-square quantile at
    // df = 1 evaluates the normal quantile of p/2) stays strictly positive.
    if (p < std::numeric_limits<double>::min()) p = std::numeric_limits<double>::min();
    if (p >= 1.0) p = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    return p;
}

Theorem2Report verify_theorem2(const SimulationConfig& cfg) {
    if (cfg.reps < 1) throw std::domain_error("verify_theorem2: reps must be >= 1");
    if (cfg.n_grid.empty()) throw std::domain_error("verify_theorem2: n_grid must be nonempty");
    if (!std::is_sorted(cfg.n_grid.begin(), cfg.n_grid.end())) {
        throw std::domain_error("verify_theorem2: n_grid must be increasing");
    }
    const double inv_e = 1.0 / M_E;
    Theorem2Report report;
    report.passed = true;
    std::vector<double> null_emp, null_se;
    for (const long n : cfg.n_grid) {
        // Null side: O_L <= W counted on the validity domain p < 1/e, the
        // domain on which the odds bound is an evidence statement.
        const std::uint64_t null_seed = derive_run_seed(cfg.seed, static_cast<std::uint64_t>(n), false);
        const double w = cfg.w_threshold;
        const int q = 1;
        auto null_event = [w, n, q, inv_e](double p) {
            if (p >= inv_e) return false;
            const cal::CalibrationResult r = cal::arlb({p, static_cast<double>(n), q});
            return r.o_l <= w;
        };
        const double p0 = mc_frequency(null_seed, cfg.reps, 0.0, n, null_event);
        const double se0 = mc_stderr_of(p0, cfg.reps);
        const double bound = (cfg.w_threshold / M_E) *
                             std::sqrt(std::log(static_cast<double>(n)) / static_cast<double>(n));
        report.rows.push_back({n, "null", cfg.w_threshold, p0, bound, true, se0});
        if (p0 > bound + 3.0 * se0) report.passed = false;
        null_emp.push_back(p0);
        null_se.push_back(se0);

        // Alternative side: P_L >= pl_threshold at effect delta.
        const std::uint64_t alt_seed = derive_run_seed(cfg.seed, static_cast<std::uint64_t>(n), true);
        const double pl_thr = cfg.pl_threshold;
        auto alt_event = [pl_thr, n, q](double p) {
            const cal::CalibrationResult r = cal::arlb({p, static_cast<double>(n), q});
            return r.p_l >= pl_thr;
        };
        const double p1 = mc_frequency(alt_seed, cfg.reps, cfg.delta, n, alt_event);
        report.rows.push_back({n, "alt", cfg.pl_threshold, p1, 0.0, false, mc_stderr_of(p1, cfg.reps)});
    }
    // Monotone decay of the null-side frequency, within 2 MC stderr.
    for (std::size_t i = 1; i < null_emp.size(); ++i) {
        const double slack = 2.0 * std::hypot(null_se[i - 1], null_se[i]);
        if (null_emp[i] > null_emp[i - 1] + slack) report.passed = false;
    }
    // Alternative-side control is asserted at the largest n.
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (it->regime == "alt") {
            if (it->empirical_prob > cfg.pl_threshold) report.passed = false;
            break;
        }
    }
    return report;
}

Theorem3Report verify_theorem3(double n_star, int q, const std::vector<double>& p_grid) {
    if (p_grid.size() < 2) throw std::domain_error("verify_theorem3: need at least two grid points");
    Theorem3Report report;
    report.passed = true;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const double p = p_grid[i];
        if (i > 0 && !(p < p_grid[i - 1])) {
            throw std::domain_error("verify_theorem3: p_grid must be strictly decreasing");
        }
        const cal::CalibrationResult r = cal::arlb({p, n_star, q});
        report.rows.push_back({p, r.o_l});
        if (!(r.o_l < prev)) report.passed = false;
        prev = r.o_l;
    }
    return report;
}

LemmaReport check_lemma1(long samples, std::uint64_t seed) {
    SplitMix64 rng(mix64(seed));
    const double inv_e = 1.0 / M_E;
    LemmaReport rep{0, 0, true};
    auto probe = [&rep](double p) {
        const double b = cal::robust_lower_bound(p);
        const double ep = M_E * p;
        rep.samples += 1;
        if (!(b >= ep && ep > p)) rep.violations += 1;
    };
    probe(1e-300);
    probe(inv_e - 1e-12);
    for (long i = 0; i < samples; ++i) probe(rng.next_double() * inv_e);
    // Equality case at the domain edge: B_L(1/e) = e * (1/e) = 1.
    const double at_edge = cal::robust_lower_bound(inv_e);
    if (std::fabs(at_edge - 1.0) > 8.0 * std::numeric_limits<double>::epsilon()) {
        rep.violations += 1;
    }
    rep.samples += 1;
    rep.passed = rep.violations == 0;
    return rep;
}

LemmaReport check_lemma2(long samples, std::uint64_t seed) {
    SplitMix64 rng(mix64(seed));
    constexpr double lo = 1e-12, hi = 0.345;
    LemmaReport rep{0, 0, true};
    auto probe = [&rep](double p) {
        const double z = -specfun::normal_quantile(p);  // Phi^-1(1-p)
        rep.samples += 1;
        if (!(z < std::sqrt(-2.0 * std::log(p)))) rep.violations += 1;
    };
    probe(lo);
    probe(0.05);
    probe(hi);
    for (long i = 0; i < samples; ++i) probe(lo + rng.next_double() * (hi - lo));
    rep.passed = rep.violations == 0;
    return rep;
}

KsReport check_null_uniformity(long samples, std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("check_null_uniformity: samples must be >= 1");
    SplitMix64 rng(mix64(seed));
    std::vector<double> draws(samples);
    for (long i = 0; i < samples; ++i) draws[i] = simulate_pvalue(0.0, 1, rng);
    std::sort(draws.begin(), draws.end());
    double d = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double cdf = draws[i];
        const double lo = static_cast<double>(i) / samples;
        const double hi = static_cast<double>(i + 1) / samples;
        d = std::max(d, std::max(std::fabs(cdf - lo), std::fabs(hi - cdf)));
    }
    KsReport rep;
    rep.samples = samples;
    rep.statistic = d;
    rep.critical = 1.9494746035043753 / std::sqrt(static_cast<double>(samples));
    rep.passed = d < rep.critical;
    return rep;
}

} // namespace arlb::consistency
