#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supercong {

using BigInt = mpz_class;

/// Exact reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a", "-a", "a/b" (whitespace not allowed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational pow(unsigned e) const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Sentinel returned by vp(0, p).
inline constexpr int kValuationInfinity = std::numeric_limits<int>::max();

int vp(const BigInt& n, std::uint64_t p);
int vp(const Rational& x, std::uint64_t p);

/// p^k as a big integer.
BigInt prime_power(std::uint64_t p, unsigned k);

}  // namespace supercong
