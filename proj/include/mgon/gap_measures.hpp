#pragma once
// Exact gap statistics for decompositions over I_n = [0, a_{mn+1}).
//
// A gap of length g between adjacent summands splits as g = m*alpha + beta
// with alpha >= 0 and 0 <= beta < m. The exact number of gap occurrences
// admits a closed form in each of the three cases (alpha = 0; alpha >= 1
// with beta > 0; alpha >= 1 with beta = 0).
//
// Two denominators are in circulation for turning counts into fractions:
//   * mean_identity: (mu_n - 1) |I_n| = (m+1)^{n-1} (2mn - (m+1)), the total
//     implied by the mean summand count, which books the empty decomposition
//     of z = 0 as -1 gaps;
//   * census: the actual number of gaps, sum of (t - 1) over nonempty
//     decompositions, which is the mean-identity total plus exactly 1.
// The census convention is what an exhaustive enumeration reproduces; the
// mean-identity convention is the default because the classical finite-n
// probability formulas are stated in it. The two differ by O((m+1)^{-n}).

#include <cstdint>
#include <optional>
#include <vector>

#include "mgon/numeric.hpp"

namespace mgon {

struct GapSplit {
    std::int64_t alpha;
    int beta;
};

/// g = m*alpha + beta with 0 <= beta < m. Requires g >= 1.
GapSplit split_gap(int m, std::int64_t g);

/// Exact number of gap occurrences of length g over all decompositions in
/// I_n (number of (z, adjacent-summand-pair) incidences). Zero when g > mn.
BigInt gap_occurrence_count(int m, std::int64_t n, std::int64_t g);

/// (mu_n - 1) |I_n| = (m+1)^{n-1} (2mn - (m+1)). Requires n >= 1.
/// Note: zero for (m, n) = (1, 1), where only the census total is usable.
BigInt gap_total_mean_identity(int m, std::int64_t n);

/// True total gap count: sum of (t - 1) over nonempty decompositions in I_n.
BigInt gap_total_census(int m, std::int64_t n);

enum class GapTotal { mean_identity, census };

/// P_n(g) as an exact rational under the chosen denominator convention.
/// Requires n >= 1, g >= 1, and a nonzero denominator.
Rational gap_prob_finite(int m, std::int64_t n, std::int64_t g,
                         GapTotal convention = GapTotal::mean_identity);

/// Limiting gap probability P(g) = lim_n P_n(g):
///   beta / (m(m+1))            when alpha = 0,
///   (m+1-beta) / (m+1)^{alpha+1}  when alpha >= 1.
Rational gap_prob_limit(int m, std::int64_t g);

/// Sum of P(g) over all g with alpha <= alpha_max plus the closed-form
/// geometric tail (m+3) / (2 (m+1)^{alpha_max+1}). Exactly 1.
Rational gap_limit_normalization(int m, std::int64_t alpha_max);

/// P(g1) P(g2): the limit of the normalized joint two-gap statistic.
Rational joint_gap_limit_product(int m, std::int64_t g1, std::int64_t g2);

struct GapTable {
    int m;
    std::optional<std::int64_t> n;  // empty for the limiting table
    struct Entry {
        std::int64_t g;
        std::int64_t alpha;
        int beta;
        Rational probability;
    };
    std::vector<Entry> entries;
};

GapTable gap_table_finite(int m, std::int64_t n, std::int64_t gmax,
                          GapTotal convention = GapTotal::census);
GapTable gap_table_limit(int m, std::int64_t gmax);

}  // namespace mgon
