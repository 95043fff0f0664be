#pragma once
// Arbitrary-precision integers and exact rationals, backed by GMP.
// Sequence values grow like 2(m+1)^n, so machine words overflow within the
// first few dozen terms; indices and counts stay in 64-bit integers.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgon {

using BigInt = mpz_class;
using Rational = mpq_class;

/// base^exp as a big integer.
inline BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Canonicalized num/den. Throws std::invalid_argument on a zero denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

/// Parses a decimal integer literal (optional leading '-').
/// Throws std::invalid_argument on malformed input.
inline BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed integer literal");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    return BigInt(std::string(text), 10);
}

inline std::string to_string(const BigInt& z) { return z.get_str(10); }

/// "num/den" in lowest terms ("num" when the denominator is 1).
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mgon
