#pragma once

// Hand-rolled generators for property-style tests. Seeds are fixed so runs are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long max_num = 40, long max_den = 40) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    /// A rational whose p-valuation is >= 0.
    Rational p_integral(std::uint64_t p, long max_num = 200, long max_den = 60) {
        for (;;) {
            const long d = integer(1, max_den);
            if (d % static_cast<long>(p) != 0) return Rational(integer(-max_num, max_num), d);
        }
    }

    std::uint64_t pick(const std::vector<std::uint64_t>& xs) {
        return xs[static_cast<std::size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 rng_;
};

inline const std::vector<std::uint64_t>& small_odd_primes() {
    static const std::vector<std::uint64_t> ps{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    return ps;
}

/// Modular inverse by the extended Euclidean algorithm, independent of GMP.
inline std::int64_t ext_euclid_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return ((s0 % m) + m) % m;
}

}  // namespace supercong::testing
