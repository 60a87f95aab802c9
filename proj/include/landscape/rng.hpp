#pragma once

#include <cstdint>

namespace landscape {

// splitmix64: the project-wide RNG. Instances, samples and simulation runs
// are all derived from it so outputs are reproducible from a single seed,
// independent of platform and thread count.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound). Modulo mapping; the bias is < 2^-59 for
    // the bounds used here (< 2^5).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Decorrelated child stream (run index, sample index, instance index).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x632BE59BD9B4E019ULL * (index + 1)));
    return SplitMix64(mixer.next());
}

}  // namespace landscape
