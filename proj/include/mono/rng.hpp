#ifndef MONO_RNG_HPP
#define MONO_RNG_HPP

#include <cstdint>

namespace mono {

/// Deterministic splitmix64 generator. Self-contained so that seeded runs
/// produce identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the distribution exact
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * real(); }

private:
    std::uint64_t state_;
};

/// Stateless hash of (seed, index) pairs, for per-row/per-item draws.
inline std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mono

#endif
