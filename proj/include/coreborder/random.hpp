#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace coreborder {

/// Seeded random stream. The engine is the standard 64-bit Mersenne
/// twister; the value mappings below are written out so that a seed yields
/// the same draws on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        const std::uint64_t bound = n;
        // reject the incomplete top bucket so every residue is equally likely
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = engine_();
        while (x > limit) x = engine_();
        return static_cast<std::size_t>(x % bound);
    }

    /// Uniform on the closed interval [0, 1].
    double unit_closed() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740991.0);
    }

    /// Uniform on the half-open interval [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    /// Standard normal via Box-Muller. Consumes two engine draws; the
    /// second variate of the pair is discarded.
    double normal() {
        const double u1 = 1.0 - unit();  // (0, 1]
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    template <class It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::size_t>(last - first);
        for (std::size_t i = n; i > 1; --i) {
            std::swap(first[i - 1], first[index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace coreborder
