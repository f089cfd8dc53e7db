#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bnsynth {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Collapses a tuple of values into a single stream seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x6a09e667f3bcc908ULL;
    std::uint64_t acc = 0;
    for (std::uint64_t p : parts) {
        state ^= p;
        acc ^= splitmix64(state);
    }
    return acc;
}

// mt19937_64 with portable uniform draws (uniform_real_distribution is
// implementation-defined, so conversions are done by hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace bnsynth
