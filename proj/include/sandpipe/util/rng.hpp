#pragma once
// Deterministic random-number utilities. The standard <random> distributions
// are implementation-defined, so every sampled decision in the pipeline goes
// through this splitmix64-based generator to keep runs byte-identical across
// platforms and compilers.

#include <cstdint>
#include <string_view>

namespace sandpipe {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    return splitmix64(state);
}

// Stable per-entity seed: mixes a base seed with a textual tag such as
// "solutions:<record-id>:2".
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    return mix_seed(base, fnv1a64(tag));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Unbiased integer in [0, n). Rejection sampling on the top of the range.
    std::uint64_t uniform(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace sandpipe
