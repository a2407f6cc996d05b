#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gabm {

// splitmix64 step; the de-facto standard seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Combine a seed with an index into a fresh derived seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL);
    return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}

// FNV-1a, used for stable content digests (cache keys, seed salts from strings).
inline std::uint64_t fnv1a64(const std::string_view text, std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Small deterministic RNG. The standard <random> distributions are
/// implementation-defined, so all draws are mapped explicitly to keep
/// transcripts identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        // Lemire reduction; bias negligible and deterministic.
        #ifdef __SIZEOF_INT128__
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * bound) >> 64);
        #else
        return next_u64() % bound;
        #endif
    }

    /// Uniform in [lo, hi].
    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Round half away from zero; amounts in the games are integer currency.
inline int round_half_up(double x) {
    return static_cast<int>(std::floor(x + 0.5));
}

inline double clamp01(double x) {
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

} // namespace gabm
