#include "supercong/pochhammer.hpp"

#include <stdexcept>

namespace supercong {

Rational pochhammer(const Rational& a, std::uint64_t n) {
    Rational r{1};
    Rational x = a;
    for (std::uint64_t j = 0; j < n; ++j) {
        r *= x;
        if (r.is_zero()) return r;
        x += Rational{1};
    }
    return r;
}

CycloRational pochhammer_cyclo(const CycloRational& a, std::uint64_t n) {
    CycloRational r(a.tag(), Rational{1});
    CycloRational x = a;
    for (std::uint64_t j = 0; j < n; ++j) {
        r *= x;
        x += Rational{1};
    }
    return r;
}

Rational collapsed_poch3(const Rational& u, const Rational& v, std::uint64_t p, std::uint64_t k) {
    const Rational shift = (v * Rational(BigInt(static_cast<unsigned long>(p)))).pow(3);
    Rational r{1};
    Rational x = u;
    for (std::uint64_t j = 0; j < k; ++j) {
        r *= x.pow(3) + shift;
        x += Rational{1};
    }
    return r;
}

Rational collapsed_poch4(const Rational& u, const Rational& v, std::uint64_t p, std::uint64_t k) {
    const Rational shift = (v * Rational(BigInt(static_cast<unsigned long>(p)))).pow(4);
    Rational r{1};
    Rational x = u;
    for (std::uint64_t j = 0; j < k; ++j) {
        r *= x.pow(4) - shift;
        x += Rational{1};
    }
    return r;
}

Rational half_harmonic2(std::uint64_t p) {
    if (p % 2 == 0) throw std::invalid_argument("half_harmonic2: p must be odd");
    // Accumulate over a common denominator to avoid a gcd per term.
    BigInt num = 0;
    BigInt den = 1;
    for (std::uint64_t j = 1; j <= (p - 1) / 2; ++j) {
        BigInt jj = BigInt(static_cast<unsigned long>(j)) * static_cast<unsigned long>(j);
        num = num * jj + den;
        den *= jj;
    }
    return Rational(num, den);
}

}  // namespace supercong
