#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "supercong/rational.hpp"

namespace supercong {

/// Which quadratic cyclotomic field an element lives in.
///   I:     zeta^2 = -1           (Q(i))
///   Omega: zeta^2 = -1 - zeta    (Q(omega), omega a primitive cube root of unity)
enum class RootTag { I, Omega };

/// re + im * zeta in Q(i) or Q(omega).
class CycloRational {
public:
    explicit CycloRational(RootTag tag) : tag_(tag) {}
    CycloRational(RootTag tag, Rational re, Rational im = Rational{})
        : re_(std::move(re)), im_(std::move(im)), tag_(tag) {}

    /// The generator zeta of the tagged field.
    static CycloRational zeta(RootTag tag) { return {tag, Rational{0}, Rational{1}}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    RootTag tag() const noexcept { return tag_; }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    /// Galois conjugate: i -> -i, omega -> omega^2.
    CycloRational conj() const;
    /// x * conj(x), a rational.
    Rational norm() const;
    CycloRational inverse() const;  // throws std::domain_error on zero

    /// Real part as a Rational; throws NonRealResult if im != 0.
    Rational to_rational() const;

    std::string str() const;

    CycloRational operator-() const { return {tag_, -re_, -im_}; }
    CycloRational& operator+=(const CycloRational& o);
    CycloRational& operator-=(const CycloRational& o);
    CycloRational& operator*=(const CycloRational& o);
    CycloRational& operator/=(const CycloRational& o);
    CycloRational& operator+=(const Rational& r) { re_ += r; return *this; }
    CycloRational& operator*=(const Rational& r);

    friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
    friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
    friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
    friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }
    friend CycloRational operator+(CycloRational a, const Rational& b) { return a += b; }
    friend CycloRational operator*(CycloRational a, const Rational& b) { return a *= b; }
    friend CycloRational operator*(const Rational& b, CycloRational a) { return a *= b; }

    friend bool operator==(const CycloRational& a, const CycloRational& b) {
        return a.tag_ == b.tag_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    void require_same_field(const CycloRational& o) const;

    Rational re_;
    Rational im_;
    RootTag tag_;
};

std::ostream& operator<<(std::ostream& os, const CycloRational& x);

}  // namespace supercong
