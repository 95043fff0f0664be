#pragma once
// Uniform sampling of decompositions.
//
// Full interval I_n = [0, a_{mn+1}): one parity bit plus n digits uniform in
// [0, m] is exactly a uniform draw by the digit bijection, and reads off the
// decomposition with no big-integer work.
//
// Bracket [a_n, a_{n+1}): the width is always 2(m+1)^k with k = floor((n-1)/m),
// so a uniform offset is drawn rejection-free as parity bit plus k digits;
// the sampled integer a_n + offset is then decoded with decompose().

#include <cstdint>
#include <vector>

#include "mgon/decomposition.hpp"
#include "mgon/numeric.hpp"
#include "mgon/params.hpp"
#include "mgon/rng.hpp"

namespace mgon::mc {

enum class Interval { full, bracket };

struct SamplerConfig {
    int m = 1;
    std::int64_t n = 1;
    Interval interval = Interval::full;
    std::uint64_t sample_count = 1;
    std::uint64_t seed = 1;
    unsigned threads = 1;  // chunk count; determinism is per (seed, threads)
};

void validate(const SamplerConfig& cfg);

/// Draws decompositions of uniform integers from the configured interval.
/// Identical (config) => identical stream. Materializes values and indices;
/// the experiment kernels use the cheaper digit-level draws below.
class UniformSampler {
  public:
    explicit UniformSampler(const SamplerConfig& cfg);

    Decomposition next();

  private:
    SamplerConfig cfg_;
    MGonParams params_;
    Xoshiro256ss rng_;
    BigInt bracket_base_;  // a_n, bracket mode only
};

/// Digit-level draw shared by sampler and kernels: fills parity and digits
/// (digit_count values in [0, m]) from the stream, in that fixed order.
struct DigitDraw {
    int parity = 0;
    std::vector<int> digits;

    void draw(Xoshiro256ss& rng, int m, std::int64_t digit_count);

    int summand_count() const;
    /// Ascending summand indices (0 for parity, m*k + d_k per nonzero digit),
    /// appended to out (cleared first).
    void indices(int m, std::vector<SeqIdx>& out) const;
};

/// Number of free digits in bracket mode: k with a_{n+1} - a_n = 2(m+1)^k.
std::int64_t bracket_digit_count(const MGonParams& p, std::int64_t n);

}  // namespace mgon::mc
