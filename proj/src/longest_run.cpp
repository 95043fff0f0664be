#include "mgon/longest_run.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mgon {

LongestRunPrediction schilling_prediction(double p, std::int64_t n_flips) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
    if (n_flips < 1) throw std::invalid_argument("n_flips must be >= 1");
    const double q = 1.0 - p;
    const double log_p = std::log(p);
    LongestRunPrediction r;
    r.p = p;
    r.n_flips = n_flips;
    r.mean = std::log(static_cast<double>(n_flips) * q) / (-log_p) -
             std::numbers::egamma / log_p - 0.5;
    r.variance = std::numbers::pi * std::numbers::pi / (6.0 * log_p * log_p) + 1.0 / 12.0;
    return r;
}

LongestGapPrediction longest_gap_prediction(int m, std::int64_t n) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 2 * m) throw std::invalid_argument("longest_gap_prediction requires n >= 2m");
    LongestGapPrediction out;
    out.main_term = m * std::log2(static_cast<double>(n) / (2.0 * m));
    out.coin_flips = n / m;
    out.schilling_refined = m * schilling_prediction(0.5, out.coin_flips).mean;
    return out;
}

}  // namespace mgon
