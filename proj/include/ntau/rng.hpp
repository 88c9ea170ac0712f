#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace ntau {

/// splitmix64 finalizer; used to derive independent per-trial seeds from a
/// base seed so that concurrent trial execution is order-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard; the bounded samplers below avoid std::uniform_int_distribution,
/// whose sequences are implementation-defined, so identical seeds give
/// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    /// Uniform-ish value in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool flip() { return (engine_() & 1u) != 0; }

    /// Nonzero rational with numerator/denominator magnitudes in [1, 8].
    mpq_class nonzero_rational(bool allow_negative) {
        mpq_class q(range(1, 8), range(1, 8));
        q.canonicalize();
        if (allow_negative && flip()) q = -q;
        return q;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ntau
