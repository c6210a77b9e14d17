#pragma once

#include <cstdint>

namespace tilegraph {

// Counter-based generator: output i is the SplitMix64 finalizer applied to
// key + i·golden, so any (master seed, stream) pair yields an independent,
// reproducible stream. Constants are the published SplitMix64 ones.
struct CounterRng {
    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    static CounterRng from_stream(std::uint64_t master, std::uint64_t stream) {
        return CounterRng{mix(master + kGolden * (stream + 1)), 0};
    }

    std::uint64_t next() { return mix(key + kGolden * ++counter); }

    // Lemire's unbiased bounded draw.
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

}  // namespace tilegraph
