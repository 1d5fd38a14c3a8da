#pragma once

#include <cstdint>
#include <random>

namespace parfact {

// splitmix64: stable across platforms, used to derive per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x51ED2701FFFULL));
}

// Unbiased uniform draw in [0, bound) by rejection. std::uniform_int_distribution
// is implementation-defined, so it cannot be used for reproducible streams.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    // 2^64 mod bound; draws >= 2^64 - rem fall in the short final block.
    const std::uint64_t rem = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (rem == 0 || r < 0 - rem) return r % bound;
    }
}

} // namespace parfact
