#include "supercong/residue.hpp"

#include <stdexcept>

#include "supercong/errors.hpp"

namespace supercong {

ResidueInt::ResidueInt(std::uint64_t p, unsigned k, const BigInt& value)
    : p_(p), k_(k), modulus_(prime_power(p, k)) {
    if (p < 2) throw std::invalid_argument("ResidueInt: p must be >= 2");
    if (k == 0) throw std::invalid_argument("ResidueInt: k must be positive");
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void ResidueInt::require_same_ring(const ResidueInt& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw std::invalid_argument("ResidueInt: mixing Z/" + std::to_string(p_) + "^" + std::to_string(k_) +
                                    " with Z/" + std::to_string(o.p_) + "^" + std::to_string(o.k_));
}

bool ResidueInt::is_unit() const {
    BigInt pp(static_cast<unsigned long>(p_));
    return !mpz_divisible_p(value_.get_mpz_t(), pp.get_mpz_t());
}

ResidueInt ResidueInt::inverse() const {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw std::domain_error("ResidueInt: " + str() + " is not a unit mod " + modulus_.get_str());
    return {p_, k_, inv};
}

ResidueInt ResidueInt::pow(unsigned long e) const {
    BigInt r;
    mpz_powm_ui(r.get_mpz_t(), value_.get_mpz_t(), e, modulus_.get_mpz_t());
    return {p_, k_, r};
}

ResidueInt ResidueInt::operator-() const { return {p_, k_, BigInt(-value_)}; }

ResidueInt& ResidueInt::operator+=(const ResidueInt& o) {
    require_same_ring(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
}

ResidueInt& ResidueInt::operator-=(const ResidueInt& o) {
    require_same_ring(o);
    value_ -= o.value_;
    if (value_ < 0) value_ += modulus_;
    return *this;
}

ResidueInt& ResidueInt::operator*=(const ResidueInt& o) {
    require_same_ring(o);
    value_ *= o.value_;
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
    return *this;
}

ResidueInt reduce_mod(const Rational& x, std::uint64_t p, unsigned k) {
    if (x.is_zero()) return {p, k, 0L};
    if (vp(x, p) < 0)
        throw NegativeValuation("reduce_mod: " + x.str() + " has negative " + std::to_string(p) + "-adic valuation");
    ResidueInt num(p, k, x.num());
    ResidueInt den(p, k, x.den());
    return num * den.inverse();
}

}  // namespace supercong
