#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vsd {

// Deterministic RNG used everywhere seeds matter. The engine is mt19937_64
// (fully specified by the standard); the distributions are hand-rolled so
// draws are reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    // Uniform integer in [0, n), unbiased via rejection.
    uint64_t uniform_int(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; pairs are cached.
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_int(i)]);
        }
    }

    uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64 finalizer. Stateless; used to derive per-episode seeds and to
// hash (seed, index) pairs for procedural effects.
uint64_t mix64(uint64_t x);

// Hash a sequence of values into one key (order-sensitive).
uint64_t hash_combine(uint64_t seed, uint64_t v);

// Stateless uniform in [0,1) from a hash key.
inline double hash_unit(uint64_t key) {
    return static_cast<double>(mix64(key) >> 11) * 0x1.0p-53;
}

} // namespace vsd
