#include "mgon/summand_counts.hpp"

#include <stdexcept>

namespace mgon {

std::vector<BigInt> binomial_row(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("binomial_row requires n >= 0");
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t k = i; k >= 1; --k) row[k] += row[k - 1];
    return row;
}

BigInt pnk_closed(int m, std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::invalid_argument("pnk_closed requires n, k >= 0");
    if (k == 0) return BigInt(1);
    if (k > n + 1) return BigInt(0);
    auto binom = binomial_row(n);
    auto c = [&](std::int64_t j) -> BigInt {
        return (j < 0 || j > n) ? BigInt(0) : binom[static_cast<std::size_t>(j)];
    };
    return pow_ui(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) * c(k) +
           pow_ui(static_cast<unsigned long>(m), static_cast<unsigned long>(k - 1)) * c(k - 1);
}

std::vector<BigInt> pnk_row_recursive(int m, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("pnk_row_recursive requires n >= 0");
    std::vector<BigInt> row = {BigInt(1), BigInt(1)};  // row n = 0 over I_0 = {0, 1}
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 2);
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < row.size()) next[k] = row[k];
            if (k >= 1 && k - 1 < row.size()) next[k] += m * row[k - 1];
        }
        row = std::move(next);
    }
    return row;
}

std::vector<BigInt> gen_poly_row(int m, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("gen_poly_row requires n >= 0");
    // (my + 1)^n by repeated multiplication, then convolve with (1 + y).
    std::vector<BigInt> poly = {BigInt(1)};
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] += m * poly[k];
        }
        poly = std::move(next);
    }
    std::vector<BigInt> out(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        out[k] += poly[k];
        out[k + 1] += poly[k];
    }
    return out;
}

ExactMoments exact_moments(int m, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("exact_moments requires n >= 0");
    Rational mean = make_rational(BigInt(m) * n, BigInt(m + 1)) + make_rational(1, 2);
    Rational variance =
        make_rational(BigInt(m) * n, BigInt(m + 1) * (m + 1)) + make_rational(1, 4);
    return {mean, variance};
}

ExactMoments moments_from_distribution(int m, std::int64_t n) {
    auto row = pnk_row_recursive(m, n);
    BigInt total(0), s1(0), s2(0);
    for (std::size_t k = 0; k < row.size(); ++k) {
        total += row[k];
        s1 += BigInt(k) * row[k];
        s2 += BigInt(k) * BigInt(k) * row[k];
    }
    Rational mean = make_rational(s1, total);
    Rational variance = make_rational(s2, total) - mean * mean;
    return {mean, variance};
}

}  // namespace mgon
