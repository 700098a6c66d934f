#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace xtalk {

/// Seeded random source used everywhere results must be reproducible.
///
/// Uniform bits come from std::mt19937_64, whose output sequence is fixed
/// by the standard, so identical seeds give identical streams on every
/// platform. Doubles and Gaussians are derived with explicit transforms
/// (53-bit mantissa scaling, Box-Muller) instead of the unspecified
/// std::*_distribution adapters.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Standard normal via Box-Muller; one fresh pair of uniforms per call.
    double gaussian() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace xtalk
