#pragma once

#include <cstdint>
#include <random>

namespace absaf {

/// Seedable generator with portable derived draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard; the
/// std distributions are not, so uniform draws are derived here from raw engine output.
/// Child streams are seeded with splitmix64(seed, stream) so that, e.g., each voter's
/// ballot depends only on (seed, voter) and not on the order voters are sampled in.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    /// Independent stream identified by `stream`.
    Rng child(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL))); }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound) without modulo bias. bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound);
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform01() < p; }

    static std::uint64_t mix(std::uint64_t x);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace absaf
