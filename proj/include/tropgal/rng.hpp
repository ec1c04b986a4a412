#pragma once

#include <cstdint>
#include <string>

namespace tropgal {

// Deterministic 64-bit generator (splitmix64); the full sequence is a pure
// function of the seed, so runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via rejection sampling (no modulo bias).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next());
        std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % range;
        std::uint64_t x = next();
        while (x >= bound) x = next();
        return lo + static_cast<std::int64_t>(x % range);
    }

private:
    std::uint64_t state_;
};

// Stable per-key derived seed, e.g. for one table entry per galaxy node.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& key) {
    Rng r(seed);
    std::uint64_t h = r.next();
    for (unsigned char c : key) {
        Rng step(h ^ c);
        h = step.next();
    }
    return h;
}

} // namespace tropgal
