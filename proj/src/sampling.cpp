#include "mgon/sampling.hpp"

#include <stdexcept>

#include "mgon/sequence.hpp"

namespace mgon::mc {

void validate(const SamplerConfig& cfg) {
    if (cfg.m < 1) throw std::invalid_argument("m must be >= 1");
    if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
    if (cfg.sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

void DigitDraw::draw(Xoshiro256ss& rng, int m, std::int64_t digit_count) {
    parity = static_cast<int>(rng.below(2));
    digits.resize(static_cast<std::size_t>(digit_count));
    const auto radix = static_cast<std::uint64_t>(m) + 1;
    for (auto& d : digits) d = static_cast<int>(rng.below(radix));
}

int DigitDraw::summand_count() const {
    int t = parity;
    for (int d : digits)
        if (d > 0) ++t;
    return t;
}

void DigitDraw::indices(int m, std::vector<SeqIdx>& out) const {
    out.clear();
    if (parity) out.push_back(0);
    for (std::size_t k = 0; k < digits.size(); ++k)
        if (digits[k] > 0) out.push_back(static_cast<SeqIdx>(m) * static_cast<SeqIdx>(k) + digits[k]);
}

std::int64_t bracket_digit_count(const MGonParams& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("bracket requires n >= 1");
    return p.split(n).k;
}

UniformSampler::UniformSampler(const SamplerConfig& cfg)
    : cfg_(cfg), params_(cfg.m), rng_(chunk_seed(cfg.seed, 0)) {
    validate(cfg);
    if (cfg_.interval == Interval::bracket) bracket_base_ = term(params_, cfg_.n);
}

Decomposition UniformSampler::next() {
    DigitDraw draw;
    if (cfg_.interval == Interval::full) {
        draw.draw(rng_, cfg_.m, cfg_.n);
        Decomposition d;
        DigitVector dv{draw.parity, draw.digits};
        d.value = value_of(params_, dv);
        draw.indices(cfg_.m, d.indices);
        return d;
    }
    // Bracket: uniform offset in [0, a_{n+1} - a_n), then decode the integer.
    draw.draw(rng_, cfg_.m, bracket_digit_count(params_, cfg_.n));
    DigitVector dv{draw.parity, draw.digits};
    return decompose(params_, bracket_base_ + value_of(params_, dv));
}

}  // namespace mgon::mc
