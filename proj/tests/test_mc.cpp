#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <iostream>

#include "mgon/experiments.hpp"
#include "mgon/sampling.hpp"
#include "mgon/sequence.hpp"
#include "mgon/stats.hpp"

using namespace mgon;
using namespace mgon::mc;

TEST_CASE("identical configs give identical reports") {
    SamplerConfig cfg{3, 100, Interval::full, 10000, 9, 2};
    auto a = run_summand_experiment(cfg);
    auto b = run_summand_experiment(cfg);
    CHECK(a.histogram == b.histogram);
    CHECK(a.sample_mean == b.sample_mean);
    CHECK(a.ks_statistic == b.ks_statistic);

    SamplerConfig other = cfg;
    other.seed = 10;
    CHECK(run_summand_experiment(other).histogram != a.histogram);
}

TEST_CASE("kernel counts equal sampler-materialized counts") {
    SamplerConfig cfg{3, 30, Interval::full, 5000, 5, 1};
    auto report = run_summand_experiment(cfg);
    UniformSampler sampler(cfg);
    std::vector<std::uint64_t> hist(32, 0);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i)
        ++hist[sampler.next().summand_count()];
    for (auto [k, count] : report.histogram)
        CHECK(hist[static_cast<std::size_t>(k)] == count);
}

TEST_CASE("digit sampler is uniform over the interval (chi-square, 99%)") {
    SamplerConfig cfg{2, 3, Interval::full, 1000000, 1, 1};
    UniformSampler s(cfg);
    std::vector<std::uint64_t> counts(54, 0);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
        Decomposition d = s.next();
        auto v = d.value.get_ui();
        REQUIRE(v < 54);
        CHECK(recompose(MGonParams(cfg.m), d) == d.value);
        ++counts[v];
    }
    // 53 degrees of freedom; 99th percentile of chi-square is 79.84.
    CHECK(chi_square_uniform(counts, cfg.sample_count) < 79.84);
}

TEST_CASE("bracket sampler is uniform over [a_n, a_{n+1})") {
    SamplerConfig cfg{2, 3, Interval::bracket, 200000, 1, 1};
    UniformSampler s(cfg);
    std::vector<std::uint64_t> counts(6, 0);  // [6, 12)
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
        Decomposition d = s.next();
        auto v = d.value.get_ui();
        REQUIRE(v >= 6);
        REQUIRE(v < 12);
        CHECK(d.indices.back() == 3);  // top summand is a_n
        ++counts[v - 6];
    }
    // 5 degrees of freedom; 99th percentile is 15.09.
    CHECK(chi_square_uniform(counts, cfg.sample_count) < 15.09);
}

TEST_CASE("m=1 summand counts follow Binomial(n+1, 1/2)") {
    SamplerConfig cfg{1, 8, Interval::full, 200000, 1, 1};
    auto r = run_summand_experiment(cfg);
    std::vector<double> expected(10);
    double binom = 1;
    for (int k = 0; k <= 9; ++k) {
        expected[static_cast<std::size_t>(k)] =
            binom / 512.0 * static_cast<double>(cfg.sample_count);
        binom = binom * (9 - k) / (k + 1);
    }
    double chi = 0;
    for (auto [k, count] : r.histogram) {
        double diff = static_cast<double>(count) - expected[static_cast<std::size_t>(k)];
        chi += diff * diff / expected[static_cast<std::size_t>(k)];
    }
    // 9 degrees of freedom; 99th percentile is 21.67.
    CHECK(chi < 21.67);
}

TEST_CASE("sampler mean tracks the exact moments") {
    SamplerConfig cfg{3, 50, Interval::full, 100000, 5, 1};
    auto r = run_summand_experiment(cfg);
    CHECK(r.predicted_mean == doctest::Approx(38.0));
    double band = 4 * std::sqrt(r.predicted_variance / 100000.0);
    CHECK(std::abs(r.sample_mean - r.predicted_mean) < band);
}

TEST_CASE("tiny interval distribution is exact: I_1 for m=1") {
    SamplerConfig cfg{1, 1, Interval::full, 40000, 1, 1};
    auto r = run_summand_experiment(cfg);
    // counts over {0,1,2} with probabilities {1/4, 1/2, 1/4}
    REQUIRE(r.histogram.size() == 3);
    for (auto [k, count] : r.histogram) {
        double p = (k == 1) ? 0.5 : 0.25;
        double se = std::sqrt(p * (1 - p) / 40000.0);
        CHECK(std::abs(static_cast<double>(count) / 40000.0 - p) < 4 * se);
    }
}

TEST_CASE("gap experiment reproduces the limiting probabilities") {
    SamplerConfig cfg{3, 600, Interval::full, 20000, 1, 2};
    auto r = run_gap_experiment(cfg);
    std::uint64_t total_counted = 0;
    for (auto [g, count] : r.histogram) total_counted += count;
    CHECK(total_counted == r.histogram_total);  // fractions sum to 1 exactly

    auto frac = [&](std::int64_t want) {
        for (auto [g, count] : r.histogram)
            if (g == want)
                return static_cast<double>(count) / static_cast<double>(r.histogram_total);
        return 0.0;
    };
    // Gaps pooled from one decomposition are correlated, so the fluctuation
    // scale is set by the sample count, not the gap count.
    double band = 1.0 / std::sqrt(static_cast<double>(cfg.sample_count));
    CHECK(std::abs(frac(1) - 1.0 / 12) < band);
    CHECK(std::abs(frac(2) - 2.0 / 12) < band);
    CHECK(std::abs(frac(3) - 0.25) < band);
    CHECK(r.ks_statistic < 0.01);
}

TEST_CASE("gap experiment at m=1 decays geometrically") {
    SamplerConfig cfg{1, 200, Interval::full, 20000, 2, 1};
    auto r = run_gap_experiment(cfg);
    double band = 1.0 / std::sqrt(static_cast<double>(cfg.sample_count));
    for (std::int64_t g = 1; g <= 4; ++g) {
        double expect = std::pow(2.0, -static_cast<double>(g));
        double got = 0;
        for (auto [gap, count] : r.histogram)
            if (gap == g)
                got = static_cast<double>(count) / static_cast<double>(r.histogram_total);
        CHECK(std::abs(got - expect) < band);
    }
}

TEST_CASE("individual gap measures converge (median KS decreases)") {
    double prev = 2.0;
    for (std::int64_t n : {100, 200, 400}) {
        SamplerConfig cfg{3, n, Interval::full, 10000, 7, 2};
        auto r = run_individual_gap_experiment(cfg);
        CHECK(r.samples_used + r.samples_skipped == cfg.sample_count);
        for (double d : r.ks_distances) {
            CHECK(d >= 0.0);
            CHECK(d <= 1.0);
        }
        CHECK(r.median < prev);
        CHECK(r.p90 >= r.median);
        prev = r.median;
    }
}

TEST_CASE("point-mass gap measure has the expected KS distance") {
    // A z with exactly one gap of length 2 at m=1: KS = max(F_nu(1), 1 - F_nu(2)).
    std::vector<std::uint64_t> counts = {0, 0, 1};
    auto cdf = limit_gap_cdf(1, 2);
    CHECK(ks_discrete(counts, 1, cdf) == doctest::Approx(0.5));
}

TEST_CASE("longest-gap experiment basics") {
    SamplerConfig cfg{1, 64, Interval::bracket, 20000, 1, 2};
    auto r = run_longest_gap_experiment(cfg);
    CHECK(r.histogram_total == cfg.sample_count);
    CHECK(r.predicted_mean == doctest::Approx(5.0));
    CHECK(std::abs(r.sample_mean - r.predicted_mean) < 2.0);  // within 2m
    CHECK(r.sample_variance < 3.6);
    CHECK(r.schilling_refined == doctest::Approx(5.3327).epsilon(1e-3));
    auto again = run_longest_gap_experiment(cfg);
    CHECK(again.histogram == r.histogram);
}

TEST_CASE("KS-against-normal shrinks as n grows") {
    SamplerConfig small{3, 50, Interval::full, 50000, 3, 1};
    SamplerConfig large{3, 600, Interval::full, 50000, 3, 1};
    CHECK(run_summand_experiment(large).ks_statistic <
          run_summand_experiment(small).ks_statistic);
}

TEST_CASE("config validation and interval preconditions") {
    CHECK_THROWS_AS(validate(SamplerConfig{0, 5, Interval::full, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SamplerConfig{3, 0, Interval::full, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SamplerConfig{3, 5, Interval::full, 0, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SamplerConfig{3, 5, Interval::full, 1, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        run_longest_gap_experiment(SamplerConfig{3, 600, Interval::full, 10, 1, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        run_longest_gap_experiment(SamplerConfig{3, 5, Interval::bracket, 10, 1, 1}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        run_summand_experiment(SamplerConfig{3, 600, Interval::bracket, 10, 1, 1}),
        std::invalid_argument);
}

TEST_CASE("moment accumulator matches direct formulas") {
    MomentAccumulator acc;
    for (std::uint64_t x : {2, 4, 4, 6, 9}) acc.add(x);
    CHECK(acc.mean() == doctest::Approx(5.0));
    CHECK(acc.variance() == doctest::Approx(5.6));
    MomentAccumulator left, right;
    for (std::uint64_t x : {2, 4}) left.add(x);
    for (std::uint64_t x : {4, 6, 9}) right.add(x);
    left.merge(right);
    CHECK(left.mean() == acc.mean());
    CHECK(left.variance() == acc.variance());
    CHECK(left.skewness() == acc.skewness());
}
