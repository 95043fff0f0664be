#include "mgon/decomposition.hpp"

#include <stdexcept>

#include "mgon/sequence.hpp"

namespace mgon {

DigitVector digits_of(const MGonParams& p, const BigInt& z) {
    if (sgn(z) < 0) throw std::invalid_argument("decompose requires z >= 0");
    DigitVector d;
    d.parity_bit = mpz_odd_p(z.get_mpz_t()) ? 1 : 0;
    BigInt w = (z - d.parity_bit) / 2;
    while (sgn(w) > 0) {
        unsigned long digit = mpz_fdiv_q_ui(w.get_mpz_t(), w.get_mpz_t(),
                                            static_cast<unsigned long>(p.radix));
        d.digits.push_back(static_cast<int>(digit));
    }
    return d;
}

BigInt value_of(const MGonParams& p, const DigitVector& d) {
    if (d.parity_bit != 0 && d.parity_bit != 1)
        throw std::invalid_argument("parity bit must be 0 or 1");
    BigInt w(0);
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
        if (*it < 0 || *it > p.m) throw std::invalid_argument("digit out of range [0, m]");
        w = w * p.radix + *it;
    }
    return 2 * w + d.parity_bit;
}

Decomposition decompose(const MGonParams& p, const BigInt& z) {
    DigitVector dv = digits_of(p, z);
    Decomposition d;
    d.value = z;
    if (dv.parity_bit) d.indices.push_back(0);
    for (std::size_t k = 0; k < dv.digits.size(); ++k) {
        if (dv.digits[k] > 0)
            d.indices.push_back(p.join(static_cast<SeqIdx>(k), dv.digits[k]));
    }
    return d;
}

Decomposition decompose_greedy(const MGonParams& p, const BigInt& z) {
    if (sgn(z) < 0) throw std::invalid_argument("decompose requires z >= 0");
    Decomposition d;
    d.value = z;
    BigInt w = z;
    // Largest power with 2(m+1)^k <= w, i.e. the start of the top bin.
    BigInt pw(1);
    SeqIdx k = 0;
    while (2 * pw * p.radix <= w) {
        pw *= p.radix;
        ++k;
    }
    std::vector<SeqIdx> rev;
    for (; k >= 0; --k) {
        BigInt bin_first = 2 * pw;
        if (bin_first <= w) {
            BigInt q = w / bin_first;
            int r = q >= p.m ? p.m : static_cast<int>(q.get_si());
            w -= r * bin_first;
            rev.push_back(p.join(k, r));
        }
        if (k > 0) pw /= p.radix;
    }
    if (w == 1) {
        rev.push_back(0);
        w = 0;
    }
    if (sgn(w) != 0) throw std::logic_error("greedy decomposition left a remainder");
    d.indices.assign(rev.rbegin(), rev.rend());
    return d;
}

bool is_legal(const MGonParams& p, std::span<const SeqIdx> indices) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 0) return false;
        if (j > 0) {
            if (indices[j] <= indices[j - 1]) return false;
            // Bins are intervals of indices, so adjacent pairs suffice.
            if (p.bin_of(indices[j]) == p.bin_of(indices[j - 1])) return false;
        }
    }
    return true;
}

BigInt recompose(const MGonParams& p, std::span<const SeqIdx> indices) {
    if (!is_legal(p, indices))
        throw std::invalid_argument("illegal decomposition: indices must be strictly "
                                    "increasing with at most one per bin");
    BigInt z(0);
    for (SeqIdx n : indices) z += term(p, n);
    return z;
}

BigInt recompose(const MGonParams& p, const Decomposition& d) {
    return recompose(p, std::span<const SeqIdx>(d.indices));
}

std::vector<SeqIdx> gaps_of(const Decomposition& d) {
    std::vector<SeqIdx> gaps;
    if (d.indices.size() < 2) return gaps;
    gaps.reserve(d.indices.size() - 1);
    for (std::size_t j = 1; j < d.indices.size(); ++j)
        gaps.push_back(d.indices[j] - d.indices[j - 1]);
    return gaps;
}

std::vector<BigInt> summand_values(const MGonParams& p, const Decomposition& d) {
    std::vector<BigInt> vals;
    vals.reserve(d.indices.size());
    for (SeqIdx n : d.indices) vals.push_back(term(p, n));
    return vals;
}

}  // namespace mgon
