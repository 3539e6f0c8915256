#pragma once

#include <cstdint>

namespace cpta {

/// splitmix64 (Steele, Lea, Flood; the java.util.SplittableRandom finalizer).
/// Used for every seeded generator in this project because its output is a
/// pure function of uint64 arithmetic and therefore identical on every
/// platform, unlike std::uniform_int_distribution.
///
/// Split rule: child stream `i` of a generator in state `s` is seeded with
/// mix(s + (i + 1) * GAMMA). Splitting does not advance the parent.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += GAMMA;
        return mix(state_);
    }

    SplitMix64 split(uint64_t stream) const {
        return SplitMix64(mix(state_ + (stream + 1) * GAMMA));
    }

    // Unbiased integer in [0, bound) by rejection. bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool bit() { return next() >> 63; }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr uint64_t GAMMA = 0x9e3779b97f4a7c15ULL;
    uint64_t state_;
};

} // namespace cpta
