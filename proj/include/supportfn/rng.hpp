#pragma once

#include <cstdint>

namespace supportfn {

/// xoshiro256** with splitmix64 seeding. Self-contained so that streams are
/// bit-reproducible across standard libraries and platforms; every
/// Monte-Carlo result records the seed of the stream that produced it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [a,b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform point in the open unit disc by rejection from [-1,1]^2.
    void unit_disc(double& x, double& y) {
        do {
            x = uniform(-1.0, 1.0);
            y = uniform(-1.0, 1.0);
        } while (x * x + y * y >= 1.0);
    }

    /// Derives an independent deterministic stream (task = scenario/check salt).
    Rng stream(std::uint64_t salt) const {
        return Rng(state_[0] ^ (salt * 0x2545f4914f6cdd1dull) ^ rotl(salt, 23));
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }
    std::uint64_t state_[4];
};

} // namespace supportfn
