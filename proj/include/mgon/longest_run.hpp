#pragma once
// Longest-run-of-heads predictor and the longest-gap comparison curves.

#include <cstdint>

namespace mgon {

struct LongestRunPrediction {
    double p = 0;              // probability of heads
    std::int64_t n_flips = 0;
    double mean = 0;
    double variance = 0;
};

/// Closed-form mean and variance of the longest run of heads in n_flips
/// tosses of a p-coin:
///   mean = log_{1/p}(n q) - gamma/ln p - 1/2,   q = 1 - p,
///   var  = pi^2 / (6 ln^2 p) + 1/12.
/// The omitted oscillatory terms are below 0.0001 plus a vanishing o(1)
/// remainder; treat predictions as carrying that model-error band.
/// Throws std::invalid_argument unless 0 < p < 1 and n_flips >= 1.
LongestRunPrediction schilling_prediction(double p, std::int64_t n_flips);

struct LongestGapPrediction {
    double main_term = 0;          // m * log2(n / (2m))
    double schilling_refined = 0;  // m * schilling(1/2, floor(n/m)).mean
    std::int64_t coin_flips = 0;   // floor(n/m)
};

/// Predicted mean of the longest gap between summand indices for integers
/// in [a_n, a_{n+1}), in index units. Requires n >= 2m so the main term's
/// logarithm is positive.
LongestGapPrediction longest_gap_prediction(int m, std::int64_t n);

}  // namespace mgon
