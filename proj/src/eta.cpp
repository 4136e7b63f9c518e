#include "supercong/eta.hpp"

#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

IntSeries IntSeries::one(std::size_t bound) {
    IntSeries s(bound);
    s.coeffs_[0] = 1;
    return s;
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    if (o.bound() != bound()) throw std::invalid_argument("IntSeries: bound mismatch");
    IntSeries r(bound());
    const std::size_t b = bound();
    for (std::size_t i = 0; i <= b; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= b; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

void IntSeries::mul_binomial(std::size_t step, unsigned e) {
    if (step == 0) throw std::invalid_argument("IntSeries::mul_binomial: step must be positive");
    const std::size_t b = bound();
    // Apply (1 - q^step) e times; each pass runs from high degree down so it is in place.
    for (unsigned t = 0; t < e; ++t)
        for (std::size_t n = b; n >= step; --n) coeffs_[n] -= coeffs_[n - step];
}

IntSeries eta_factor_series(std::size_t m, unsigned e, std::size_t bound) {
    if (m == 0) throw std::invalid_argument("eta_factor_series: scale must be positive");
    IntSeries s = IntSeries::one(bound);
    for (std::size_t step = m; step <= bound; step += m) s.mul_binomial(step, e);
    return s;
}

std::vector<BigInt> f_coefficients(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("f_coefficients: bound must be >= 1");
    // f = q * g with g = prod (1-q^{2n})^4 (1-q^{4n})^4, so a(n) = [q^{n-1}] g.
    const std::size_t gb = bound - 1;
    IntSeries g = eta_factor_series(2, 4, gb);
    for (std::size_t step = 4; step <= gb; step += 4) g.mul_binomial(step, 4);
    return g.coeffs();
}

EtaTable::EtaTable(std::size_t bound) : coeffs_(f_coefficients(bound)) {}

const BigInt& EtaTable::a(std::size_t n) const {
    if (n == 0 || n > coeffs_.size())
        throw OutOfRange("a(" + std::to_string(n) + ") outside the eta table bound " + std::to_string(coeffs_.size()));
    return coeffs_[n - 1];
}

std::int64_t EtaTable::a_int64(std::size_t n) const {
    const BigInt& v = a(n);
    if (!v.fits_slong_p()) throw OutOfRange("a(" + std::to_string(n) + ") does not fit in 64 bits");
    return v.get_si();
}

BigInt a_p(std::uint64_t p, const EtaTable& table) { return table.a(static_cast<std::size_t>(p)); }

}  // namespace supercong
