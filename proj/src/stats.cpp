#include "mgon/stats.hpp"

#include <cmath>

namespace mgon::mc {

namespace {
long double ld(unsigned __int128 v) {
    return static_cast<long double>(static_cast<std::uint64_t>(v >> 64)) *
               18446744073709551616.0L +
           static_cast<long double>(static_cast<std::uint64_t>(v));
}
}  // namespace

double MomentAccumulator::mean() const {
    if (count == 0) return 0.0;
    return static_cast<double>(ld(s1) / count);
}

double MomentAccumulator::variance() const {
    if (count == 0) return 0.0;
    long double n = count;
    long double m1 = ld(s1) / n;
    return static_cast<double>(ld(s2) / n - m1 * m1);
}

double MomentAccumulator::skewness() const {
    if (count == 0) return 0.0;
    long double n = count;
    long double m1 = ld(s1) / n;
    long double m2 = ld(s2) / n - m1 * m1;
    long double m3 = ld(s3) / n - 3 * m1 * ld(s2) / n + 2 * m1 * m1 * m1;
    if (m2 <= 0) return 0.0;
    return static_cast<double>(m3 / std::pow(m2, 1.5L));
}

double MomentAccumulator::excess_kurtosis() const {
    if (count == 0) return 0.0;
    long double n = count;
    long double m1 = ld(s1) / n;
    long double m2 = ld(s2) / n - m1 * m1;
    long double m4 = ld(s4) / n - 4 * m1 * ld(s3) / n + 6 * m1 * m1 * ld(s2) / n -
                     3 * m1 * m1 * m1 * m1;
    if (m2 <= 0) return 0.0;
    return static_cast<double>(m4 / (m2 * m2) - 3.0L);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_against_normal(const std::vector<std::uint64_t>& histogram,
                         std::uint64_t total, double mu, double sigma) {
    double d = 0.0;
    std::uint64_t cum = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        if (histogram[k] == 0 && cum == 0) continue;
        cum += histogram[k];
        double f_emp = static_cast<double>(cum) / static_cast<double>(total);
        double f_ref = normal_cdf((static_cast<double>(k) + 0.5 - mu) / sigma);
        d = std::max(d, std::abs(f_emp - f_ref));
        if (cum == total) break;
    }
    return d;
}

double ks_discrete(const std::vector<std::uint64_t>& counts, std::uint64_t total,
                   const std::vector<double>& reference_cdf) {
    double d = 0.0;
    std::uint64_t cum = 0;
    for (std::size_t g = 0; g < counts.size() && g < reference_cdf.size(); ++g) {
        cum += counts[g];
        double f_emp = static_cast<double>(cum) / static_cast<double>(total);
        d = std::max(d, std::abs(f_emp - reference_cdf[g]));
    }
    return d;
}

double chi_square_uniform(const std::vector<std::uint64_t>& counts,
                          std::uint64_t total) {
    double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (std::uint64_t c : counts) {
        double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

}  // namespace mgon::mc
