#pragma once
// Summary statistics and distribution diagnostics for the experiments.

#include <cstdint>
#include <vector>

namespace mgon::mc {

/// Exact integer power sums of small non-negative observations; merging is
/// plain addition, so chunked accumulation is order-independent.
struct MomentAccumulator {
    std::uint64_t count = 0;
    unsigned __int128 s1 = 0, s2 = 0, s3 = 0, s4 = 0;

    void add(std::uint64_t x) {
        unsigned __int128 v = x;
        ++count;
        s1 += v;
        s2 += v * v;
        s3 += v * v * v;
        s4 += v * v * v * v;
    }

    void merge(const MomentAccumulator& other) {
        count += other.count;
        s1 += other.s1;
        s2 += other.s2;
        s3 += other.s3;
        s4 += other.s4;
    }

    double mean() const;
    double variance() const;         // population variance
    double skewness() const;         // standardized third moment
    double excess_kurtosis() const;  // standardized fourth moment minus 3
};

/// Standard normal distribution function.
double normal_cdf(double x);

/// Kolmogorov-Smirnov distance between the empirical distribution of integer
/// observations (histogram[k] = count of value k) standardized by (mu, sigma)
/// and the standard normal, evaluating the continuous CDF at half-integer
/// shifted points: D = max_k |F_emp(k) - Phi((k + 1/2 - mu)/sigma)|.
double ks_against_normal(const std::vector<std::uint64_t>& histogram,
                         std::uint64_t total, double mu, double sigma);

/// KS distance between a discrete empirical measure on non-negative integers
/// (counts[g], total) and a reference CDF tabulated at integers
/// (reference_cdf[g] = P(G <= g)). Both CDFs are step functions on the
/// integers, so the supremum is attained on the tabulated range.
double ks_discrete(const std::vector<std::uint64_t>& counts, std::uint64_t total,
                   const std::vector<double>& reference_cdf);

/// Pearson chi-square statistic against a uniform expectation.
double chi_square_uniform(const std::vector<std::uint64_t>& counts,
                          std::uint64_t total);

}  // namespace mgon::mc
