#include "mgon/oracle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mgon/decomposition.hpp"
#include "mgon/params.hpp"

namespace mgon::oracle {

namespace {

class Enumerator {
  public:
    Enumerator(int m, std::int64_t n, const CensusOptions& opts)
        : m_(m), n_(n), params_(m) {
        // 2(m+1)^n with overflow/guard check.
        std::uint64_t size = 2;
        for (std::int64_t i = 0; i < n; ++i) {
            if (size > opts.max_decompositions / static_cast<std::uint64_t>(m + 1))
                throw std::domain_error("enumeration instance too large");
            size *= static_cast<std::uint64_t>(m + 1);
        }
        if (size > opts.max_decompositions)
            throw std::domain_error("enumeration instance too large");

        census_.m = m;
        census_.n = n;
        census_.interval_size = size;
        census_.max_gap = m * n;
        census_.pnk_counts.assign(static_cast<std::size_t>(n) + 2, 0);
        census_.gap_counts.assign(static_cast<std::size_t>(census_.max_gap) + 1, 0);
        census_.decompose_checked = opts.check_decompose;
        census_.joint_counted = opts.joint_census;
        if (opts.joint_census) {
            std::size_t side = static_cast<std::size_t>(census_.max_gap) + 1;
            census_.joint_main.assign(side * side, 0);
            census_.joint_adjacent.assign(side * side, 0);
            census_.joint_from_zero.assign(side * side, 0);
        }
        seen_.assign((size + 63) / 64, 0);

        // Per-bin term values: bin i >= 1 holds r * first_i, first_i = 2(m+1)^{i-1}.
        bin_first_.resize(static_cast<std::size_t>(n) + 1);
        std::uint64_t first = 2;
        for (std::int64_t i = 1; i <= n; ++i) {
            bin_first_[static_cast<std::size_t>(i)] = first;
            first *= static_cast<std::uint64_t>(m + 1);
        }
        indices_.reserve(static_cast<std::size_t>(n) + 1);
    }

    EnumerationCensus run() {
        walk(1, 0);
        if (seen_count_ != census_.interval_size)
            throw std::runtime_error("enumeration incomplete");  // unreachable if unique
        return std::move(census_);
    }

  private:
    void walk(std::int64_t bin, std::uint64_t value) {
        if (bin > n_) {
            record(value);
            return;
        }
        walk(bin + 1, value);  // bin left empty
        std::uint64_t first = bin_first_[static_cast<std::size_t>(bin)];
        for (int r = 1; r <= m_; ++r) {
            indices_.push_back(m_ * (bin - 1) + r);
            walk(bin + 1, value + static_cast<std::uint64_t>(r) * first);
            indices_.pop_back();
        }
    }

    void record(std::uint64_t value) {
        // The b_0 choice toggles index 0 and adds 1; handle both branches here.
        tally(value);
        indices_.insert(indices_.begin(), 0);
        tally(value + 1);
        indices_.erase(indices_.begin());
    }

    void tally(std::uint64_t value) {
        if (value >= census_.interval_size)
            throw std::runtime_error("enumerated value outside [0, a_{mn+1}): " +
                                     std::to_string(value));
        std::uint64_t& word = seen_[value / 64];
        std::uint64_t bit = 1ull << (value % 64);
        if (word & bit)
            throw std::runtime_error("duplicate decomposition for value " +
                                     std::to_string(value));
        word |= bit;
        ++seen_count_;

        std::size_t t = indices_.size();
        ++census_.pnk_counts[t];
        if (t >= 1) census_.n_gaps_total += t - 1;
        gaps_.clear();
        for (std::size_t j = 1; j < t; ++j) {
            std::int64_t g = indices_[j] - indices_[j - 1];
            ++census_.gap_counts[static_cast<std::size_t>(g)];
            gaps_.push_back(g);
        }
        if (census_.joint_counted && gaps_.size() >= 2) {
            std::size_t side = static_cast<std::size_t>(census_.max_gap) + 1;
            for (std::size_t i1 = 0; i1 + 1 < gaps_.size(); ++i1) {
                for (std::size_t i2 = i1 + 1; i2 < gaps_.size(); ++i2) {
                    std::size_t slot = static_cast<std::size_t>(gaps_[i1]) * side +
                                       static_cast<std::size_t>(gaps_[i2]);
                    if (indices_[i1] == 0)
                        ++census_.joint_from_zero[slot];
                    else if (i2 == i1 + 1)
                        ++census_.joint_adjacent[slot];
                    else
                        ++census_.joint_main[slot];
                }
            }
        }
        if (census_.decompose_checked) {
            Decomposition d = decompose(params_, BigInt(static_cast<unsigned long>(value)));
            if (d.indices != indices_)
                throw std::runtime_error("decompose() disagrees with enumeration at value " +
                                         std::to_string(value));
        }
    }

    int m_;
    std::int64_t n_;
    MGonParams params_;
    EnumerationCensus census_;
    std::vector<std::uint64_t> seen_;
    std::uint64_t seen_count_ = 0;
    std::vector<std::uint64_t> bin_first_;
    std::vector<SeqIdx> indices_;
    std::vector<std::int64_t> gaps_;
};

}  // namespace

std::uint64_t EnumerationCensus::joint_total(std::int64_t g1, std::int64_t g2) const {
    if (g1 < 0 || g1 > max_gap || g2 < 0 || g2 > max_gap) return 0;
    std::size_t side = static_cast<std::size_t>(max_gap) + 1;
    std::size_t slot = static_cast<std::size_t>(g1) * side + static_cast<std::size_t>(g2);
    return joint_main[slot] + joint_adjacent[slot] + joint_from_zero[slot];
}

Rational EnumerationCensus::mean_summands() const {
    BigInt weighted(0);
    for (std::size_t t = 0; t < pnk_counts.size(); ++t)
        weighted += BigInt(t) * BigInt(pnk_counts[t]);
    return make_rational(weighted, BigInt(interval_size));
}

EnumerationCensus enumerate_all(int m, std::int64_t n, const CensusOptions& opts) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return Enumerator(m, n, opts).run();
}

Rational census_gap_probability(const EnumerationCensus& c, std::int64_t g) {
    if (c.n_gaps_total == 0) throw std::domain_error("census has no gaps");
    if (g < 0 || g > c.max_gap) return Rational(0);
    return make_rational(BigInt(c.gap_counts[static_cast<std::size_t>(g)]),
                         BigInt(c.n_gaps_total));
}

Rational census_joint_statistic(const EnumerationCensus& c, std::int64_t g1,
                                std::int64_t g2) {
    if (!c.joint_counted) throw std::logic_error("census built without joint tallies");
    Rational mu = c.mean_summands();
    Rational denom = Rational(BigInt(c.interval_size)) * mu * mu;
    return make_rational(2 * BigInt(c.joint_total(g1, g2)), BigInt(1)) / denom;
}

}  // namespace mgon::oracle
