#include "supercong/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace supercong {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (char c : digits)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string owned(s.front() == '+' ? s.substr(1) : s);
        return BigInt(owned, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    Rational r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    r.q_ = mpq_class(n, d);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

int vp(const BigInt& n, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
    if (n == 0) return kValuationInfinity;
    BigInt m = abs(n);
    BigInt pp(static_cast<unsigned long>(p));
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
        ++v;
    }
    return v;
}

int vp(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) return kValuationInfinity;
    return vp(x.num(), p) - vp(x.den(), p);
}

BigInt prime_power(std::uint64_t p, unsigned k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
    return r;
}

}  // namespace supercong
