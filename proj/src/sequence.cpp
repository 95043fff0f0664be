#include "mgon/sequence.hpp"

#include <stdexcept>

namespace mgon {

BigInt term(const MGonParams& p, SeqIdx n) {
    if (n < 0) throw std::invalid_argument("negative sequence index");
    if (n == 0) return BigInt(1);
    auto [k, r] = p.split(n);
    return 2 * r * pow_ui(p.radix, static_cast<unsigned long>(k));
}

std::vector<BigInt> sequence_prefix(const MGonParams& p, SeqIdx count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    // Incremental: within a bin terms step by a_{mk+1}; across bins scale by m+1.
    BigInt first(2);  // a_1
    out.emplace_back(1);
    while (std::ssize(out) < count) {
        for (int r = 1; r <= p.m && std::ssize(out) < count; ++r) out.push_back(r * first);
        first *= p.radix;
    }
    return out;
}

std::vector<BigInt> sequence_by_recurrence(const MGonParams& p, SeqIdx count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    for (SeqIdx n = 0; n < count; ++n) {
        if (n == 0)
            out.emplace_back(1);
        else if (n <= p.m)
            out.emplace_back(2 * n);
        else
            out.push_back(p.radix * out[static_cast<std::size_t>(n - p.m)]);
    }
    return out;
}

std::vector<BigInt> sequence_by_construction(const MGonParams& p, SeqIdx count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    out.emplace_back(1);
    // covered = largest integer decomposable from completed bins b_0..b_k.
    // A new bin opens at covered+1; adding the bin's r-th element extends
    // coverage to that element plus everything below the bin, so the next
    // element is element + covered + 1.
    BigInt covered(1);
    while (std::ssize(out) < count) {
        BigInt bin_first = covered + 1;
        BigInt element = bin_first;
        BigInt bin_last = element;
        for (int r = 1; r <= p.m; ++r) {
            if (std::ssize(out) < count) out.push_back(element);
            bin_last = element;
            element += bin_first;
        }
        covered += bin_last;
    }
    return out;
}

BigInt omega(const MGonParams& p, SeqIdx n) {
    if (n < 0) throw std::invalid_argument("omega requires n >= 0");
    // a_0 + sum_{i=1..n} a_{mi}, with a_{mi} = 2m(m+1)^{i-1}.
    BigInt acc(1);
    BigInt top(2 * p.m);
    for (SeqIdx i = 1; i <= n; ++i) {
        acc += top;
        top *= p.radix;
    }
    return acc;
}

BigInt interval_size(const MGonParams& p, SeqIdx n) {
    if (n < 0) throw std::invalid_argument("interval_size requires n >= 0");
    return 2 * pow_ui(p.radix, static_cast<unsigned long>(n));
}

}  // namespace mgon
