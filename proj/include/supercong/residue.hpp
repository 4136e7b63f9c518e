#pragma once

#include <cstdint>
#include <string>

#include "supercong/rational.hpp"

namespace supercong {

/// An element of Z/p^k. Values with different (p, k) never combine.
class ResidueInt {
public:
    ResidueInt(std::uint64_t p, unsigned k, const BigInt& value);
    ResidueInt(std::uint64_t p, unsigned k, long value) : ResidueInt(p, k, BigInt(value)) {}

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    const BigInt& modulus() const noexcept { return modulus_; }
    const BigInt& value() const noexcept { return value_; }
    std::string str() const { return value_.get_str(); }

    bool is_unit() const;
    ResidueInt inverse() const;  // throws std::domain_error if not a unit
    ResidueInt pow(unsigned long e) const;

    ResidueInt operator-() const;
    ResidueInt& operator+=(const ResidueInt& o);
    ResidueInt& operator-=(const ResidueInt& o);
    ResidueInt& operator*=(const ResidueInt& o);

    friend ResidueInt operator+(ResidueInt a, const ResidueInt& b) { return a += b; }
    friend ResidueInt operator-(ResidueInt a, const ResidueInt& b) { return a -= b; }
    friend ResidueInt operator*(ResidueInt a, const ResidueInt& b) { return a *= b; }

    friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.value_ == b.value_;
    }

private:
    void require_same_ring(const ResidueInt& o) const;

    std::uint64_t p_;
    unsigned k_;
    BigInt modulus_;
    BigInt value_;
};

/// num * den^{-1} in Z/p^k. Throws NegativeValuation if vp(x, p) < 0.
ResidueInt reduce_mod(const Rational& x, std::uint64_t p, unsigned k);

}  // namespace supercong
