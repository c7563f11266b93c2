#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace contagion {

/// SplitMix64 finalizer: bijective 64-bit avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed by absorbing a sequence of fields
/// (grid indices, trial number, role tag) into the master seed. Each
/// absorption is a bijection of the running state, so distinct field
/// tuples collide only by avalanche accident (~2^-64).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> fields) {
    std::uint64_t h = master;
    for (std::uint64_t f : fields)
        h = mix64(h + 0x9e3779b97f4a7c15ull + f);
    return h;
}

/// Deterministic random stream (SplitMix64). All samplers in this project
/// are hand-rolled on top of it so that seeded runs reproduce bit-for-bit
/// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform on [0,1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0,1); safe to pass to log().
    double uniform01_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (one variate per pair of uniforms;
    /// no cached state, so consumption is position-independent).
    double normal() {
        double u1 = uniform01_open();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double exponential() { return -std::log(uniform01_open()); }

    /// Gamma(shape, scale) by Marsaglia-Tsang squeeze; shape < 1 uses the
    /// boosting identity G(a) = G(a+1) * U^(1/a).
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            double u = uniform01_open();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01_open();
            if (u < 1.0 - 0.0331 * x * x * x * x)
                return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v * scale;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace contagion
