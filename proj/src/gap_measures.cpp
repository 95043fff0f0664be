#include "mgon/gap_measures.hpp"

#include <stdexcept>

namespace mgon {

GapSplit split_gap(int m, std::int64_t g) {
    if (g < 1) throw std::invalid_argument("gap length must be >= 1");
    return {g / m, static_cast<int>(g % m)};
}

BigInt gap_occurrence_count(int m, std::int64_t n, std::int64_t g) {
    if (n < 0) throw std::invalid_argument("gap_occurrence_count requires n >= 0");
    if (g < 1) throw std::invalid_argument("gap length must be >= 1");
    if (g > m * n) return BigInt(0);
    auto [alpha, beta] = split_gap(m, g);
    auto pw = [&](std::int64_t e) {
        return pow_ui(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(e));
    };
    BigInt total(0);
    if (alpha == 0) {
        // Gap inside adjacent bins: start at a_0, or at one of the top beta
        // slots of a bin with the endpoint spilling into the next bin.
        total += pw(n - 1);
        if (n >= 2) total += 2 * beta * BigInt(n - 1) * pw(n - 2);
    } else if (beta > 0) {
        // beta >= 1 forces alpha <= n-1, so every exponent here is >= 0.
        total += pw(n - alpha - 1);                                    // start at a_0
        total += 2 * (m - beta) * BigInt(n - alpha) * pw(n - alpha - 1);
        if (n - alpha - 1 >= 1) total += 2 * beta * BigInt(n - alpha - 1) * pw(n - alpha - 2);
    } else {
        // beta = 0, 1 <= alpha <= n.
        total += pw(n - alpha);  // start at a_0
        if (n - alpha >= 1) total += 2 * m * BigInt(n - alpha) * pw(n - alpha - 1);
    }
    return total;
}

BigInt gap_total_mean_identity(int m, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("gap totals require n >= 1");
    return pow_ui(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(n - 1)) *
           (2 * BigInt(m) * n - (m + 1));
}

BigInt gap_total_census(int m, std::int64_t n) { return gap_total_mean_identity(m, n) + 1; }

Rational gap_prob_finite(int m, std::int64_t n, std::int64_t g, GapTotal convention) {
    if (n < 1) throw std::invalid_argument("gap_prob_finite requires n >= 1");
    BigInt den =
        convention == GapTotal::mean_identity ? gap_total_mean_identity(m, n) : gap_total_census(m, n);
    return make_rational(gap_occurrence_count(m, n, g), den);
}

Rational gap_prob_limit(int m, std::int64_t g) {
    auto [alpha, beta] = split_gap(m, g);
    if (alpha == 0) return make_rational(BigInt(beta), BigInt(m) * (m + 1));
    return make_rational(BigInt(m + 1 - beta),
                         pow_ui(static_cast<unsigned long>(m + 1),
                                static_cast<unsigned long>(alpha + 1)));
}

Rational gap_limit_normalization(int m, std::int64_t alpha_max) {
    if (alpha_max < 1) throw std::invalid_argument("alpha_max must be >= 1");
    Rational sum(0);
    for (std::int64_t alpha = 0; alpha <= alpha_max; ++alpha)
        for (int beta = 0; beta < m; ++beta) {
            std::int64_t g = m * alpha + beta;
            if (g >= 1) sum += gap_prob_limit(m, g);
        }
    // Each alpha >= 1 block sums to m(m+3)/(2(m+1)^{alpha+1}); tail telescopes.
    Rational tail = make_rational(BigInt(m + 3),
                                  2 * pow_ui(static_cast<unsigned long>(m + 1),
                                             static_cast<unsigned long>(alpha_max + 1)));
    return sum + tail;
}

Rational joint_gap_limit_product(int m, std::int64_t g1, std::int64_t g2) {
    return gap_prob_limit(m, g1) * gap_prob_limit(m, g2);
}

GapTable gap_table_finite(int m, std::int64_t n, std::int64_t gmax, GapTotal convention) {
    if (gmax < 1) throw std::invalid_argument("gmax must be >= 1");
    GapTable t{m, n, {}};
    for (std::int64_t g = 1; g <= gmax; ++g) {
        auto [alpha, beta] = split_gap(m, g);
        t.entries.push_back({g, alpha, beta, gap_prob_finite(m, n, g, convention)});
    }
    return t;
}

GapTable gap_table_limit(int m, std::int64_t gmax) {
    if (gmax < 1) throw std::invalid_argument("gmax must be >= 1");
    GapTable t{m, std::nullopt, {}};
    for (std::int64_t g = 1; g <= gmax; ++g) {
        auto [alpha, beta] = split_gap(m, g);
        t.entries.push_back({g, alpha, beta, gap_prob_limit(m, g)});
    }
    return t;
}

}  // namespace mgon
