#pragma once
// Seeded Monte Carlo experiments.
//
// Samples are split over `threads` chunks; each chunk owns a derived RNG
// substream (see rng.hpp) and a private accumulator, and accumulators are
// merged in chunk order, so a report depends only on (config contents), not
// on scheduling.

#include <cstdint>
#include <vector>

#include "mgon/sampling.hpp"

namespace mgon::mc {

struct ExperimentReport {
    SamplerConfig config;
    std::vector<std::pair<std::int64_t, std::uint64_t>> histogram;  // value -> count
    std::uint64_t histogram_total = 0;
    double sample_mean = 0;
    double sample_variance = 0;
    double skewness = 0;
    double excess_kurtosis = 0;
    double ks_statistic = 0;   // summands: vs standard normal; gaps: vs nu; else NaN
    double predicted_mean = 0;
    double predicted_variance = 0;
    // Longest-gap experiment only (NaN elsewhere):
    double schilling_refined = 0;   // m * schilling(1/2, floor(n/m)).mean
    double schilling_adjusted = 0;  // empty-bin rate 1/(m+1), runs converted to index gaps
};

/// Summand-count distribution over I_n: histogram over k, sample moments,
/// KS distance of the (mu_n, sigma_n)-standardized counts from the standard
/// normal, and the exact predicted moments. Counts come straight from the
/// sampled digits; no big integers are materialized.
ExperimentReport run_summand_experiment(const SamplerConfig& cfg);

/// Pools all gaps of the sampled decompositions (the leading index-0 offset
/// is not a gap). Histogram over g; KS distance from the limiting gap
/// measure; predicted moments are those of the limiting measure.
ExperimentReport run_gap_experiment(const SamplerConfig& cfg);

/// Longest gap of each sampled z in [a_n, a_{n+1}) (0 when fewer than two
/// summands; such z are included). Requires interval = bracket, n >= 2m.
/// predicted_mean is the m*log2(n/2m) main term; predicted_variance is the
/// Schilling variance scaled to index units (m^2 * var).
ExperimentReport run_longest_gap_experiment(const SamplerConfig& cfg);

struct IndividualGapReport {
    SamplerConfig config;
    std::uint64_t samples_used = 0;     // z with at least two summands
    std::uint64_t samples_skipped = 0;  // z with k(z) <= 1 carry no gap measure
    std::vector<double> ks_distances;   // sorted ascending
    double median = 0;  // lower median: sorted[(count-1)/2]
    double p90 = 0;     // sorted[ceil(0.9*count)-1]
};

/// Per-sample spacing gap measures: for each z with k(z) >= 2 builds the
/// normalized gap histogram (mass 1/(k(z)-1) per gap) and records its KS
/// distance from the limiting gap measure.
IndividualGapReport run_individual_gap_experiment(const SamplerConfig& cfg);

/// Mean and variance of the limiting gap measure (for report predictions).
void limit_gap_moments(int m, double& mean, double& variance);

/// CDF of the limiting gap measure tabulated at g = 0..gmax.
std::vector<double> limit_gap_cdf(int m, std::int64_t gmax);

}  // namespace mgon::mc
