#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tml/errors.hpp"

namespace tml {

// Deterministic, platform-independent generator (splitmix64).  The standard
// library engines are portable but the distributions are not, so bounded
// draws are implemented here directly; results are reproducible across
// compilers and OSes for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], inclusive; rejection sampling keeps the
    // distribution exact.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo)
            throw DomainError("uniform: empty range [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit span
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % range) - 1;
        std::uint64_t v = next_u64();
        while (v > limit) v = next_u64();
        return lo + static_cast<std::int64_t>(v % range);
    }

    double uniform_real() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // Independent stream for a named sub-task: mixes the tag into the seed
    // (FNV-1a) so per-claim draws do not depend on evaluation order.
    static std::uint64_t derive(std::uint64_t seed, std::string_view tag) {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h ^ (h >> 32);
    }

private:
    std::uint64_t state_;
};

}  // namespace tml
