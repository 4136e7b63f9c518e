#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong {

/// Dense power series in q with exact integer coefficients, truncated at degree B.
class IntSeries {
public:
    explicit IntSeries(std::size_t bound) : coeffs_(bound + 1, 0) {}
    static IntSeries one(std::size_t bound);

    std::size_t bound() const noexcept { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
    BigInt& operator[](std::size_t n) { return coeffs_.at(n); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Truncated product; both operands must share the bound.
    IntSeries operator*(const IntSeries& o) const;
    bool operator==(const IntSeries& o) const { return coeffs_ == o.coeffs_; }

    /// Multiply in place by (1 - q^step)^e, touching only the e+1 nonzero terms.
    void mul_binomial(std::size_t step, unsigned e);

private:
    std::vector<BigInt> coeffs_;
};

/// prod_{n >= 1} (1 - q^{m n})^e truncated at degree B.
IntSeries eta_factor_series(std::size_t m, unsigned e, std::size_t bound);

/// a(1..B) for f = q prod (1-q^{2n})^4 (1-q^{4n})^4. Index 0 of the result is a(1).
std::vector<BigInt> f_coefficients(std::size_t bound);

/// Coefficient table a(n), 1 <= n <= bound, of the weight-4 eta product.
class EtaTable {
public:
    explicit EtaTable(std::size_t bound);

    std::size_t bound() const noexcept { return coeffs_.size(); }
    /// a(n); throws OutOfRange for n == 0 or n > bound.
    const BigInt& a(std::size_t n) const;
    /// a(n) narrowed to 64 bits; throws OutOfRange if it does not fit.
    std::int64_t a_int64(std::size_t n) const;

private:
    std::vector<BigInt> coeffs_;
};

/// a(p) looked up in a precomputed table.
BigInt a_p(std::uint64_t p, const EtaTable& table);

}  // namespace supercong
