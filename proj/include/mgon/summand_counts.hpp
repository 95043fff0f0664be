#pragma once
// Exact summand-count combinatorics over I_n = [0, a_{mn+1}).
//
// p_{n,k} counts integers in I_n whose decomposition has exactly k summands:
//   p_{n,0} = 1,  p_{n,k} = m^k C(n,k) + m^{k-1} C(n,k-1) for 1 <= k <= n+1,
// zero beyond. Rows obey p_{n,k} = m p_{n-1,k-1} + p_{n-1,k} and are the
// coefficients of g_n(y) = (1+y)(my+1)^n; g_n(1) = 2(m+1)^n = |I_n|.

#include <cstdint>
#include <vector>

#include "mgon/numeric.hpp"

namespace mgon {

/// Row n of Pascal's triangle: C(n, 0..n).
std::vector<BigInt> binomial_row(std::int64_t n);

/// p_{n,k} by the closed form.
BigInt pnk_closed(int m, std::int64_t n, std::int64_t k);

/// Full row [p_{n,0}, ..., p_{n,n+1}] by the recurrence from row n-1.
std::vector<BigInt> pnk_row_recursive(int m, std::int64_t n);

/// Coefficients of g_n(y) = (1+y)(my+1)^n by iterated polynomial products.
std::vector<BigInt> gen_poly_row(int m, std::int64_t n);

struct ExactMoments {
    Rational mean;      // mn/(m+1) + 1/2
    Rational variance;  // mn/(m+1)^2 + 1/4
};

/// Mean and variance of the summand count of a uniform draw from I_n,
/// by the closed forms.
ExactMoments exact_moments(int m, std::int64_t n);

/// The same moments computed from the distribution row by weighted sums
/// (independent route; equals exact_moments in exact arithmetic).
ExactMoments moments_from_distribution(int m, std::int64_t n);

}  // namespace mgon
