#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "supercong/cyclo.hpp"
#include "supercong/errors.hpp"
#include "supercong/pochhammer.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// rFs[top; bottom; z] summed over k = 0..terms.
template <typename Scalar>
struct SeriesSpec {
    std::vector<Scalar> top;
    std::vector<Scalar> bottom;
    Rational z{1};
    std::size_t terms = 0;
};

namespace detail {

inline Rational unit_like(const std::vector<Rational>&, const std::vector<Rational>&) { return Rational{1}; }

inline CycloRational unit_like(const std::vector<CycloRational>& top, const std::vector<CycloRational>& bottom) {
    if (top.empty() && bottom.empty())
        throw std::invalid_argument("cyclotomic series needs at least one parameter to fix its field");
    const RootTag tag = top.empty() ? bottom.front().tag() : top.front().tag();
    for (const auto& v : top)
        if (v.tag() != tag) throw std::invalid_argument("series parameters mix cyclotomic fields");
    for (const auto& v : bottom)
        if (v.tag() != tag) throw std::invalid_argument("series parameters mix cyclotomic fields");
    return CycloRational(tag, Rational{1});
}

inline bool is_nonpositive_integer_shift(const Rational& b, std::size_t i) {
    return (b + Rational(static_cast<long>(i))).is_zero();
}

inline bool is_nonpositive_integer_shift(const CycloRational& b, std::size_t i) {
    return b.im().is_zero() && (b.re() + Rational(static_cast<long>(i))).is_zero();
}

}  // namespace detail

/// Throws ZeroDenominatorPochhammer(term, param) if some (b_j)_k, k <= terms, vanishes.
template <typename Scalar>
void validate_bottom(const SeriesSpec<Scalar>& spec) {
    for (std::size_t j = 0; j < spec.bottom.size(); ++j)
        for (std::size_t i = 0; i < spec.terms; ++i)
            if (detail::is_nonpositive_integer_shift(spec.bottom[j], i)) throw ZeroDenominatorPochhammer(i + 1, j);
}

/// Exact truncated sum via the term ratio t_{k+1}/t_k.
template <typename Scalar>
Scalar pfq_truncated(const SeriesSpec<Scalar>& spec) {
    validate_bottom(spec);
    const Scalar one = detail::unit_like(spec.top, spec.bottom);
    Scalar sum = one;
    Scalar term = one;
    for (std::size_t k = 0; k < spec.terms; ++k) {
        const Rational shift(static_cast<long>(k));
        Scalar num = one;
        for (const auto& a : spec.top) num *= a + shift;
        if (num.is_zero()) break;  // terminating series: all later terms vanish
        Scalar den = one * Rational(static_cast<long>(k + 1));
        for (const auto& b : spec.bottom) den *= b + shift;
        term *= num;
        term /= den;
        term *= spec.z;
        sum += term;
    }
    return sum;
}

/// The k-th term, evaluated from Pochhammer products directly.
template <typename Scalar>
Scalar pfq_term(const SeriesSpec<Scalar>& spec, std::size_t k) {
    const Scalar one = detail::unit_like(spec.top, spec.bottom);
    Scalar num = one;
    Scalar den = one * pochhammer(Rational{1}, k);
    for (const auto& a : spec.top) {
        if constexpr (std::is_same_v<Scalar, Rational>) num *= pochhammer(a, k);
        else num *= pochhammer_cyclo(a, k);
    }
    for (const auto& b : spec.bottom) {
        if constexpr (std::is_same_v<Scalar, Rational>) den *= pochhammer(b, k);
        else den *= pochhammer_cyclo(b, k);
    }
    if (den.is_zero()) throw ZeroDenominatorPochhammer(k, 0);
    return num / den * spec.z.pow(static_cast<unsigned>(k));
}

/// From-scratch O(n^2) evaluator; oracle for pfq_truncated.
template <typename Scalar>
Scalar pfq_from_scratch(const SeriesSpec<Scalar>& spec) {
    validate_bottom(spec);
    Scalar sum = pfq_term(spec, 0);
    for (std::size_t k = 1; k <= spec.terms; ++k) sum += pfq_term(spec, k);
    return sum;
}

template <typename Scalar>
struct IdentityCheck {
    Scalar lhs;
    Scalar rhs;
    bool equal;
};

/// 4F3[1/2,1/2,1/2,1/2; 1,1,1; 1] truncated at (p-1)/2.
Rational kilbourn_lhs(std::uint64_t p);

/// p * 4F3[1/2,1/2,1/2,1/2; 1,3/4,5/4; 1] truncated at (p-1)/2. Requires p >= 5.
Rational thm1_rhs(std::uint64_t p);

/// 6F5[5/4,1/2,1/2,1/2,1/2,1/2; 1/4,1,1,1,1; -1] truncated at (p-1)/2.
Rational vanhamme_lhs(std::uint64_t p);

/// Terminating Whipple 6F5 at a = 1/2, x = 2n + 3/2 against its closed form
///   -(4n+3) (y/2)_{n+1} (-n+y/2)_{n+1} / (-n+(y-1)/2)_{2n+2}.
/// Throws PoleParameter when y makes a denominator vanish.
IdentityCheck<Rational> whipple_c1_check(std::uint64_t n, const Rational& y);

/// Second top parameter of the right-hand 4F3 in the Bailey specialization.
/// Printed is (1-omega)/2; Corrected is (1-omega p)/2.
enum class B1Reading { Corrected, Printed };

IdentityCheck<CycloRational> bailey_b1_check(std::uint64_t p, B1Reading reading = B1Reading::Corrected);

/// Fourth-root specialization of the Whipple closed form at n = (p-3)/4, y = -ip/2.
/// Both sides are computed in Q(i) and must be rational; requires p ≡ 3 (mod 4), p >= 7.
IdentityCheck<Rational> c3_check(std::uint64_t p);

/// The closed-form side of c3_check, i.e. -p (-ip/4)_{(p+1)/4} ((3-(i+1)p)/4)_{(p+1)/4} / ((1-(i+1)p)/4)_{(p+1)/2}.
Rational c3_closed_form(std::uint64_t p);

/// The same value rewritten as real products:
///   (p^3/16) prod_{j=1}^{(p-3)/4} (-p^2/16 - j^2) / prod_{j=1}^{(p+1)/4} (-p^2/16 - (j-1/2)^2).
Rational c3_real_product_form(std::uint64_t p);

struct RamanujanCheck {
    double partial;
    double target;
    double abs_err;
};

/// Double-precision partial sum (terms k = 0..terms-1) of the full 6F5(-1) against 2/Gamma(3/4)^4.
RamanujanCheck ramanujan_float_check(std::uint64_t terms);

}  // namespace supercong
