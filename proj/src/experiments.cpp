#include "mgon/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "mgon/gap_measures.hpp"
#include "mgon/longest_run.hpp"
#include "mgon/sequence.hpp"
#include "mgon/stats.hpp"
#include "mgon/summand_counts.hpp"

namespace mgon::mc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

/// Runs `kernel(rng, count, acc)` over per-chunk accumulators and returns
/// them in chunk order.
template <typename Acc, typename Kernel>
std::vector<Acc> run_chunks(const SamplerConfig& cfg, Kernel kernel) {
    validate(cfg);
    const unsigned t = cfg.threads;
    std::vector<Acc> accs(t);
    std::vector<std::uint64_t> counts(t, cfg.sample_count / t);
    for (unsigned i = 0; i < cfg.sample_count % t; ++i) ++counts[i];
    if (t == 1) {
        Xoshiro256ss rng(chunk_seed(cfg.seed, 0));
        kernel(rng, counts[0], accs[0]);
        return accs;
    }
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (unsigned i = 0; i < t; ++i) {
        workers.emplace_back([&, i] {
            Xoshiro256ss rng(chunk_seed(cfg.seed, i));
            kernel(rng, counts[i], accs[i]);
        });
    }
    for (auto& w : workers) w.join();
    return accs;
}

std::vector<std::pair<std::int64_t, std::uint64_t>> sparse(
    const std::vector<std::uint64_t>& dense) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] > 0) out.emplace_back(static_cast<std::int64_t>(i), dense[i]);
    return out;
}

struct HistAccumulator {
    MomentAccumulator moments;
    std::vector<std::uint64_t> hist;

    void ensure(std::size_t size) {
        if (hist.size() < size) hist.resize(size, 0);
    }
    void add(std::uint64_t x) {
        moments.add(x);
        ++hist[x];
    }
    void merge(const HistAccumulator& o) {
        moments.merge(o.moments);
        ensure(o.hist.size());
        for (std::size_t i = 0; i < o.hist.size(); ++i) hist[i] += o.hist[i];
    }
};

void fill_basic_stats(ExperimentReport& r, const HistAccumulator& acc) {
    r.histogram = sparse(acc.hist);
    r.histogram_total = acc.moments.count;
    r.sample_mean = acc.moments.mean();
    r.sample_variance = acc.moments.variance();
    r.skewness = acc.moments.skewness();
    r.excess_kurtosis = acc.moments.excess_kurtosis();
}

}  // namespace

void limit_gap_moments(int m, double& mean, double& variance) {
    // Geometric decay across alpha blocks; sum until the block weight
    // underflows double precision.
    double s0 = 0, s1 = 0, s2 = 0;
    const double radix = m + 1;
    for (std::int64_t alpha = 0;; ++alpha) {
        double block = 0;
        for (int beta = 0; beta < m; ++beta) {
            std::int64_t g = m * alpha + beta;
            if (g < 1) continue;
            double p = alpha == 0 ? beta / (static_cast<double>(m) * radix)
                                  : (radix - beta) / std::pow(radix, alpha + 1.0);
            block += p;
            s0 += p;
            s1 += p * static_cast<double>(g);
            s2 += p * static_cast<double>(g) * static_cast<double>(g);
        }
        if (alpha > 0 && block < 1e-19) break;
    }
    mean = s1 / s0;
    variance = s2 / s0 - mean * mean;
}

std::vector<double> limit_gap_cdf(int m, std::int64_t gmax) {
    std::vector<double> cdf(static_cast<std::size_t>(gmax) + 1, 0.0);
    double cum = 0;
    for (std::int64_t g = 1; g <= gmax; ++g) {
        cum += to_double(gap_prob_limit(m, g));
        cdf[static_cast<std::size_t>(g)] = cum;
    }
    return cdf;
}

ExperimentReport run_summand_experiment(const SamplerConfig& cfg) {
    if (cfg.interval != Interval::full)
        throw std::invalid_argument("summand experiment samples the full interval");
    auto accs = run_chunks<HistAccumulator>(cfg, [&](Xoshiro256ss& rng,
                                                     std::uint64_t count,
                                                     HistAccumulator& acc) {
        acc.ensure(static_cast<std::size_t>(cfg.n) + 2);
        DigitDraw draw;
        for (std::uint64_t i = 0; i < count; ++i) {
            draw.draw(rng, cfg.m, cfg.n);
            acc.add(static_cast<std::uint64_t>(draw.summand_count()));
        }
    });
    HistAccumulator merged;
    for (const auto& a : accs) merged.merge(a);

    ExperimentReport r;
    r.config = cfg;
    fill_basic_stats(r, merged);
    ExactMoments em = exact_moments(cfg.m, cfg.n);
    r.predicted_mean = to_double(em.mean);
    r.predicted_variance = to_double(em.variance);
    r.ks_statistic = ks_against_normal(merged.hist, merged.moments.count,
                                       r.predicted_mean, std::sqrt(r.predicted_variance));
    r.schilling_refined = kNan;
    r.schilling_adjusted = kNan;
    return r;
}

ExperimentReport run_gap_experiment(const SamplerConfig& cfg) {
    if (cfg.interval != Interval::full)
        throw std::invalid_argument("gap experiment samples the full interval");
    const std::size_t hist_size = static_cast<std::size_t>(cfg.m) *
                                      static_cast<std::size_t>(cfg.n) + 1;
    auto accs = run_chunks<HistAccumulator>(cfg, [&](Xoshiro256ss& rng,
                                                     std::uint64_t count,
                                                     HistAccumulator& acc) {
        acc.ensure(hist_size);
        DigitDraw draw;
        std::vector<SeqIdx> idx;
        for (std::uint64_t i = 0; i < count; ++i) {
            draw.draw(rng, cfg.m, cfg.n);
            draw.indices(cfg.m, idx);
            for (std::size_t j = 1; j < idx.size(); ++j)
                acc.add(static_cast<std::uint64_t>(idx[j] - idx[j - 1]));
        }
    });
    HistAccumulator merged;
    for (const auto& a : accs) merged.merge(a);

    ExperimentReport r;
    r.config = cfg;
    fill_basic_stats(r, merged);
    limit_gap_moments(cfg.m, r.predicted_mean, r.predicted_variance);
    auto cdf = limit_gap_cdf(cfg.m, static_cast<std::int64_t>(merged.hist.size()) - 1);
    r.ks_statistic = ks_discrete(merged.hist, merged.moments.count, cdf);
    r.schilling_refined = kNan;
    r.schilling_adjusted = kNan;
    return r;
}

ExperimentReport run_longest_gap_experiment(const SamplerConfig& cfg) {
    if (cfg.interval != Interval::bracket)
        throw std::invalid_argument("longest-gap experiment samples [a_n, a_{n+1})");
    if (cfg.n < 2 * cfg.m)
        throw std::invalid_argument("longest-gap experiment requires n >= 2m");
    const MGonParams params(cfg.m);
    const BigInt base = term(params, cfg.n);
    const std::int64_t digit_count = bracket_digit_count(params, cfg.n);
    auto accs = run_chunks<HistAccumulator>(cfg, [&](Xoshiro256ss& rng,
                                                     std::uint64_t count,
                                                     HistAccumulator& acc) {
        acc.ensure(static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.n) + 1);
        DigitDraw draw;
        DigitVector dv;
        for (std::uint64_t i = 0; i < count; ++i) {
            draw.draw(rng, cfg.m, digit_count);
            dv.parity_bit = draw.parity;
            dv.digits = draw.digits;
            Decomposition d = decompose(params, base + value_of(params, dv));
            std::int64_t longest = 0;
            for (std::size_t j = 1; j < d.indices.size(); ++j)
                longest = std::max(longest, d.indices[j] - d.indices[j - 1]);
            acc.add(static_cast<std::uint64_t>(longest));
        }
    });
    HistAccumulator merged;
    for (const auto& a : accs) merged.merge(a);

    ExperimentReport r;
    r.config = cfg;
    fill_basic_stats(r, merged);
    LongestGapPrediction pred = longest_gap_prediction(cfg.m, cfg.n);
    r.predicted_mean = pred.main_term;
    LongestRunPrediction half = schilling_prediction(0.5, pred.coin_flips);
    r.predicted_variance = static_cast<double>(cfg.m) * cfg.m * half.variance;
    r.schilling_refined = pred.schilling_refined;
    // Comparison curve with the actual empty-bin rate 1/(m+1); a run of H
    // empty bins spans an index gap of about m(H+1).
    LongestRunPrediction adj =
        schilling_prediction(1.0 / (cfg.m + 1.0), pred.coin_flips);
    r.schilling_adjusted = cfg.m * (adj.mean + 1.0);
    r.ks_statistic = kNan;
    return r;
}

IndividualGapReport run_individual_gap_experiment(const SamplerConfig& cfg) {
    if (cfg.interval != Interval::full)
        throw std::invalid_argument("individual-gap experiment samples the full interval");
    const std::int64_t max_gap = static_cast<std::int64_t>(cfg.m) * cfg.n;
    const std::vector<double> cdf = limit_gap_cdf(cfg.m, max_gap);

    struct Acc {
        std::vector<double> ks;
        std::uint64_t skipped = 0;
    };
    auto accs = run_chunks<Acc>(cfg, [&](Xoshiro256ss& rng, std::uint64_t count,
                                         Acc& acc) {
        DigitDraw draw;
        std::vector<SeqIdx> idx;
        std::vector<std::uint64_t> gap_counts(static_cast<std::size_t>(max_gap) + 1, 0);
        std::vector<std::int64_t> touched;
        for (std::uint64_t i = 0; i < count; ++i) {
            draw.draw(rng, cfg.m, cfg.n);
            draw.indices(cfg.m, idx);
            if (idx.size() < 2) {
                ++acc.skipped;
                continue;
            }
            touched.clear();
            std::int64_t z_max_gap = 0;
            for (std::size_t j = 1; j < idx.size(); ++j) {
                std::int64_t g = idx[j] - idx[j - 1];
                if (gap_counts[static_cast<std::size_t>(g)] == 0) touched.push_back(g);
                ++gap_counts[static_cast<std::size_t>(g)];
                z_max_gap = std::max(z_max_gap, g);
            }
            const auto total = static_cast<std::uint64_t>(idx.size() - 1);
            double d = 0;
            std::uint64_t cum = 0;
            for (std::int64_t g = 1; g <= z_max_gap; ++g) {
                cum += gap_counts[static_cast<std::size_t>(g)];
                double f_emp = static_cast<double>(cum) / static_cast<double>(total);
                d = std::max(d, std::abs(f_emp - cdf[static_cast<std::size_t>(g)]));
            }
            acc.ks.push_back(d);
            for (std::int64_t g : touched) gap_counts[static_cast<std::size_t>(g)] = 0;
        }
    });

    IndividualGapReport r;
    r.config = cfg;
    for (const auto& a : accs) {
        r.samples_skipped += a.skipped;
        r.ks_distances.insert(r.ks_distances.end(), a.ks.begin(), a.ks.end());
    }
    r.samples_used = r.ks_distances.size();
    std::sort(r.ks_distances.begin(), r.ks_distances.end());
    if (!r.ks_distances.empty()) {
        r.median = r.ks_distances[(r.ks_distances.size() - 1) / 2];
        std::size_t i90 = static_cast<std::size_t>(
            std::ceil(0.9 * static_cast<double>(r.ks_distances.size())));
        r.p90 = r.ks_distances[i90 == 0 ? 0 : i90 - 1];
    }
    return r;
}

}  // namespace mgon::mc
