#pragma once

// Seeded sampling built on std::mt19937_64 with hand-rolled transforms.
// The standard distribution objects are implementation-defined in how they
// consume the engine, which would tie reproducibility to a libstdc++
// version; these transforms pin the exact draw sequence.
//
// Parallel work partitions trials into chunks; chunk i uses
// substream(seed, i), so results do not depend on how chunks are
// scheduled across workers.

#include <cmath>
#include <cstdint>
#include <random>

namespace parkrelay {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double exponential_sample(std::mt19937_64& g, double mean) {
    return -mean * std::log1p(-uniform01(g));
}

inline double normal_sample(std::mt19937_64& g) {
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586 * u2);
}

// Marsaglia-Tsang; shape < 1 boosted via the power-of-uniform identity.
inline double gamma_sample(std::mt19937_64& g, double shape, double scale) {
    if (shape < 1.0) {
        double u = uniform01(g);
        return gamma_sample(g, shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal_sample(g);
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = uniform01(g);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
}

}  // namespace parkrelay
