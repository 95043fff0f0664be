#pragma once
// Deterministic 64-bit random streams for the sampling experiments.
//
// Generator: xoshiro256** seeded through SplitMix64, the combination its
// authors recommend. Substream rule, fixed so parallel runs reproduce for a
// given (seed, chunk count): a SplitMix64 master seeded with the experiment
// seed emits one 64-bit chunk seed per chunk, in chunk order; each chunk's
// xoshiro state is the first four outputs of SplitMix64(chunk seed).

#include <cstdint>

namespace mgon::mc {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Unbiased uniform draw from [0, bound), bound >= 1 (Lemire's method).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 x = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(x);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(x);
            }
        }
        return static_cast<std::uint64_t>(x >> 64);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Chunk seed i for a master experiment seed (the documented derive rule).
inline std::uint64_t chunk_seed(std::uint64_t experiment_seed, unsigned chunk_index) {
    SplitMix64 master(experiment_seed);
    std::uint64_t s = 0;
    for (unsigned i = 0; i <= chunk_index; ++i) s = master.next();
    return s;
}

}  // namespace mgon::mc
