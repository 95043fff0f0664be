#pragma once
// Legal m-gonal decompositions and the integer <-> decomposition codec.
//
// Every non-negative integer has exactly one legal decomposition: a sum of
// distinct sequence terms, indices strictly increasing, never two terms from
// the same bin. The codec rests on the bijection
//     z  <->  (parity bit, base-(m+1) digit string of (z - parity)/2),
// where digit d_k in [0, m] selects a_{mk + d_k} = 2 d_k (m+1)^k from bin
// b_{k+1} when nonzero, and the parity bit selects a_0 = 1.

#include <cstdint>
#include <span>
#include <vector>

#include "mgon/numeric.hpp"
#include "mgon/params.hpp"

namespace mgon {

struct Decomposition {
    std::vector<SeqIdx> indices;  // strictly increasing, one per bin
    BigInt value;                 // sum of the selected terms

    std::size_t summand_count() const { return indices.size(); }
};

struct DigitVector {
    int parity_bit = 0;       // 1 iff a_0 is used
    std::vector<int> digits;  // d_0, d_1, ... each in [0, m]
};

/// Base-(m+1) digits of (z - parity)/2, least significant first.
DigitVector digits_of(const MGonParams& p, const BigInt& z);

/// parity + 2 * sum d_k (m+1)^k. Throws on digits outside [0, m].
BigInt value_of(const MGonParams& p, const DigitVector& d);

/// The unique legal decomposition of z >= 0, via the digit bijection.
/// O(log z) big-integer operations. z = 0 yields the empty decomposition.
Decomposition decompose(const MGonParams& p, const BigInt& z);

/// Independent cross-check decoder: repeatedly subtracts the largest term
/// <= the remaining value. Agrees with decompose() on every input.
Decomposition decompose_greedy(const MGonParams& p, const BigInt& z);

/// Sum of a_{l} over the given indices, after validating legality.
/// Throws std::invalid_argument on index lists that are not strictly
/// increasing or that use one bin twice.
BigInt recompose(const MGonParams& p, std::span<const SeqIdx> indices);
BigInt recompose(const MGonParams& p, const Decomposition& d);

/// True iff strictly increasing and no two indices share a bin.
bool is_legal(const MGonParams& p, std::span<const SeqIdx> indices);

/// Successive index differences l_{j+1} - l_j, in order of occurrence;
/// the leading l_1 - 0 is not a gap. Empty when fewer than two summands.
std::vector<SeqIdx> gaps_of(const Decomposition& d);

/// Term values of the summands, ascending.
std::vector<BigInt> summand_values(const MGonParams& p, const Decomposition& d);

}  // namespace mgon
