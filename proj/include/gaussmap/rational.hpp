#ifndef GAUSSMAP_RATIONAL_HPP
#define GAUSSMAP_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gaussmap {

// Exact arithmetic over Q. GMP's canonical form already maintains the
// invariants we need: lowest terms, denominator > 0.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-3", "3/4". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

// "num" when the denominator is 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);

// Deterministic 64-bit PRNG used anywhere the spec calls for "random with a
// fixed seed" (modular primes, column shuffles, property-test inputs).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform-ish in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace gaussmap

#endif
