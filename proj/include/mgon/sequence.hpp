#pragma once
// Terms of the m-gonal sequence.
//
// Closed form: a_0 = 1 and a_{mk+r} = 2r(m+1)^k for k >= 0, 1 <= r <= m.
// Equivalent characterizations, kept as independent routes for cross-checks:
//   * recurrence  a_n = 2n for 1 <= n <= m, a_n = (m+1) a_{n-m} for n > m;
//   * construction: each new term is one more than the largest integer
//     legally decomposable from the terms so far.

#include <cstdint>
#include <vector>

#include "mgon/numeric.hpp"
#include "mgon/params.hpp"

namespace mgon {

/// a_n by the closed form.
BigInt term(const MGonParams& p, SeqIdx n);

/// [a_0, ..., a_{count-1}] by the closed form.
std::vector<BigInt> sequence_prefix(const MGonParams& p, SeqIdx count);

/// [a_0, ..., a_{count-1}] by the recurrence.
std::vector<BigInt> sequence_by_recurrence(const MGonParams& p, SeqIdx count);

/// [a_0, ..., a_{count-1}] by the smallest-not-yet-decomposable construction.
/// Tracks the largest covered integer per completed bin instead of probing
/// candidates one by one, but follows the constructive rule exactly.
std::vector<BigInt> sequence_by_construction(const MGonParams& p, SeqIdx count);

/// Omega_n = sum of a_{mi} for i = 0..n: the largest integer legally
/// decomposable from bins b_0..b_n. Computed as the sum; equals a_{mn+1} - 1.
BigInt omega(const MGonParams& p, SeqIdx n);

/// |I_n| = a_{mn+1} = 2(m+1)^n, the size of the interval I_n = [0, a_{mn+1}).
BigInt interval_size(const MGonParams& p, SeqIdx n);

}  // namespace mgon
