#pragma once
// Brute-force ground truth by exhaustive enumeration.
//
// Iterates every choice vector over bins b_0..b_n (bin b_0 contributes a_0
// or nothing; each later bin one of its m elements or nothing), so illegal
// decompositions cannot arise by construction. Produces census counts that
// the closed-form modules are checked against, and verifies that the
// 2(m+1)^n sums hit every value in [0, a_{mn+1}) exactly once.

#include <cstdint>
#include <vector>

#include "mgon/numeric.hpp"

namespace mgon::oracle {

struct CensusOptions {
    bool check_decompose = false;  // compare every enumerated index list with decompose()
    bool joint_census = false;     // tally ordered pairs of gaps
    std::uint64_t max_decompositions = 100'000'000;  // enumeration guard
};

struct EnumerationCensus {
    int m = 0;
    std::int64_t n = 0;
    std::uint64_t interval_size = 0;          // 2(m+1)^n
    std::vector<std::uint64_t> pnk_counts;    // by summand count, size n+2
    std::vector<std::uint64_t> gap_counts;    // by gap length, size mn+1
    std::uint64_t n_gaps_total = 0;           // sum of (t-1) over nonempty decompositions
    std::int64_t max_gap = 0;                 // mn
    bool decompose_checked = false;
    bool joint_counted = false;

    // Ordered two-gap tallies, flattened (g1, g2) -> g1*(max_gap+1)+g2, split
    // by configuration: interior pairs, pairs sharing an endpoint (the second
    // gap starts where the first ends), and pairs whose first gap starts at
    // index 0. The three add up to the full sum over j1 < j2.
    std::vector<std::uint64_t> joint_main, joint_adjacent, joint_from_zero;

    std::uint64_t joint_total(std::int64_t g1, std::int64_t g2) const;

    /// Mean summand count as an exact rational, from the census itself.
    Rational mean_summands() const;
};

/// Enumerates all decompositions over bins b_0..b_n. Throws std::domain_error
/// when 2(m+1)^n exceeds the guard, std::runtime_error on a duplicate value.
EnumerationCensus enumerate_all(int m, std::int64_t n, const CensusOptions& opts = {});

/// Fraction of all gaps that have length g: gap_counts[g] / n_gaps_total.
Rational census_gap_probability(const EnumerationCensus& c, std::int64_t g);

/// (2 / (|I_n| mu_n^2)) * sum over j1 < j2 of the two-gap indicator counts,
/// with mu_n taken from the census.
Rational census_joint_statistic(const EnumerationCensus& c, std::int64_t g1,
                                std::int64_t g2);

}  // namespace mgon::oracle
