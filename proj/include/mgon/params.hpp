#pragma once
// System parameters and index bookkeeping for the m-gonal numeration system.
//
// The sequence a_0, a_1, ... is partitioned into bins: b_0 = [a_0] and
// b_i = [a_{m(i-1)+1}, ..., a_{mi}] for i >= 1. Positive indices split as
// n = m*k + r with k >= 0 and 1 <= r <= m; r is the position inside bin
// b_{k+1}. Note r runs up to m, not m-1, so this is not the usual mod.

#include <cstdint>
#include <stdexcept>

namespace mgon {

using SeqIdx = std::int64_t;

struct MGonParams {
    int m;      // bin size, >= 1
    int radix;  // m + 1

    explicit MGonParams(int bin_size) : m(bin_size), radix(bin_size + 1) {
        if (bin_size < 1) throw std::invalid_argument("m must be >= 1");
    }

    struct KR {
        SeqIdx k;  // bin offset: index lies in bin b_{k+1}
        int r;     // position within the bin, 1 <= r <= m
    };

    /// Splits n >= 1 as n = m*k + r with 1 <= r <= m.
    KR split(SeqIdx n) const {
        if (n < 1) throw std::invalid_argument("split requires n >= 1");
        SeqIdx k = (n - 1) / m;
        return {k, static_cast<int>(n - k * m)};
    }

    SeqIdx join(SeqIdx k, int r) const { return m * k + r; }

    /// Bin number holding index n: 0 for n = 0, else ceil(n/m).
    SeqIdx bin_of(SeqIdx n) const {
        if (n < 0) throw std::invalid_argument("negative sequence index");
        return n == 0 ? 0 : (n + m - 1) / m;
    }
};

}  // namespace mgon
