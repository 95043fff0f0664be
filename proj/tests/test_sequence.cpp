#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "mgon/params.hpp"
#include "mgon/sequence.hpp"

using namespace mgon;

TEST_CASE("closed-form terms match the known sequences") {
    MGonParams p3(3);
    // Triangle sequence: 1, 2, 4, 6, 8, 16, 24, 32, ...
    CHECK(term(p3, 0) == 1);
    CHECK(term(p3, 4) == 8);
    CHECK(term(p3, 5) == 16);
    CHECK(term(p3, 6) == 24);
    CHECK(term(p3, 7) == 32);
    CHECK(term(p3, 15) == 1536);

    MGonParams p2(2);
    CHECK(term(p2, 6) == 36);

    MGonParams p1(1);
    CHECK(term(p1, 10) == 1024);  // 1-gonal terms are the powers of two
    for (int m = 1; m <= 8; ++m) CHECK(term(MGonParams(m), 0) == 1);
}

TEST_CASE("sequence_prefix examples") {
    CHECK(sequence_prefix(MGonParams(3), 7) ==
          std::vector<BigInt>{1, 2, 4, 6, 8, 16, 24});
    CHECK(sequence_prefix(MGonParams(2), 5) == std::vector<BigInt>{1, 2, 4, 6, 12});
    CHECK(sequence_prefix(MGonParams(1), 4) == std::vector<BigInt>{1, 2, 4, 8});
    CHECK_THROWS_AS(sequence_prefix(MGonParams(3), 0), std::invalid_argument);
}

TEST_CASE("prefix is strictly increasing") {
    for (int m : {1, 2, 3, 5, 8}) {
        auto terms = sequence_prefix(MGonParams(m), 80);
        for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i - 1] < terms[i]);
    }
}

TEST_CASE("closed form = recurrence = construction") {
    for (int m = 1; m <= 8; ++m) {
        MGonParams p(m);
        auto closed = sequence_prefix(p, 120);
        auto rec = sequence_by_recurrence(p, 120);
        auto cons = sequence_by_construction(p, 120);
        CHECK(closed == rec);
        CHECK(closed == cons);
    }
}

TEST_CASE("recurrence relation holds for term()") {
    for (int m = 1; m <= 8; ++m) {
        MGonParams p(m);
        for (SeqIdx n = 1; n <= m; ++n) CHECK(term(p, n) == 2 * n);
        for (SeqIdx n = m + 1; n <= 150; ++n)
            CHECK(term(p, n) == (m + 1) * term(p, n - m));
    }
}

TEST_CASE("bin-start and within-bin identities") {
    for (int m = 1; m <= 8; ++m) {
        MGonParams p(m);
        // a_{mk+1} = a_{mk} + a_{m(k-1)+1}
        for (SeqIdx k = 1; k <= 50; ++k)
            CHECK(term(p, m * k + 1) == term(p, m * k) + term(p, m * (k - 1) + 1));
        // a_{mk+r} = r a_{mk+1}
        for (SeqIdx k = 0; k <= 50; ++k)
            for (int r = 1; r <= m; ++r)
                CHECK(term(p, m * k + r) == r * term(p, m * k + 1));
    }
}

TEST_CASE("omega examples and identity") {
    CHECK(omega(MGonParams(3), 0) == 1);
    CHECK(omega(MGonParams(3), 1) == 7);
    CHECK(omega(MGonParams(2), 2) == 17);
    for (int m : {1, 2, 3, 5, 8}) {
        MGonParams p(m);
        for (SeqIdx n = 0; n <= 50; ++n)
            CHECK(omega(p, n) == term(p, static_cast<SeqIdx>(m) * n + 1) - 1);
    }
}

TEST_CASE("interval_size equals a_{mn+1}") {
    for (int m : {1, 2, 4, 7}) {
        MGonParams p(m);
        for (SeqIdx n = 0; n <= 40; ++n)
            CHECK(interval_size(p, n) == term(p, static_cast<SeqIdx>(m) * n + 1));
    }
}

TEST_CASE("bin_of and the k,r split") {
    MGonParams p3(3);
    CHECK(p3.bin_of(0) == 0);
    CHECK(p3.bin_of(4) == 2);
    CHECK(MGonParams(2).bin_of(6) == 3);
    for (int m = 1; m <= 6; ++m) {
        MGonParams p(m);
        for (SeqIdx n = 1; n <= 300; ++n) {
            auto [k, r] = p.split(n);
            CHECK(p.join(k, r) == n);
            CHECK(r >= 1);
            CHECK(r <= m);
            CHECK(p.bin_of(n) == k + 1);
        }
    }
    CHECK_THROWS_AS(MGonParams(0), std::invalid_argument);
    CHECK_THROWS_AS(p3.split(0), std::invalid_argument);
}
