#ifndef ADMRANK_RNG_HPP
#define ADMRANK_RNG_HPP

#include <cstdint>

namespace admrank {

/// splitmix64: tiny, platform-independent, splittable by seed mixing.
/// Used for all sampling so that results are reproducible bit-for-bit
/// across platforms and thread counts (std:: distributions are not).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform on [lo, hi] by rejection
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }
};

/// Derive an independent stream for (seed, stream-id).
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    s.next();
    return s.next();
}

} // namespace admrank

#endif
