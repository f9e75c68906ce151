#pragma once

#include <cstdint>

namespace netcomp {

/// Deterministic pseudorandom stream used throughout the simulator.
///
/// xoshiro256++ seeded through splitmix64. All draws the simulator makes go
/// through the member functions below, so a (seed, consumption order) pair
/// pins every run bit-for-bit regardless of platform or standard library.
/// Streams are splittable: split(tag) derives an independent child stream
/// from the original seed and the tag, not from the current position.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    /// Child stream independent of this stream's position.
    Rng split(std::uint64_t tag) const {
        std::uint64_t sm = seed_ ^ (0x9e3779b97f4a7c15ULL + tag);
        std::uint64_t child = splitmix64(sm);
        child ^= splitmix64(sm);
        return Rng(child);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0,1), 53 significant bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased (rejection sampling). bound > 0.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_[4];
};

} // namespace netcomp
