#include "supercong/hypergeom.hpp"

#include <cmath>
#include <string>

namespace supercong {

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Rational big(std::uint64_t p) { return Rational(BigInt(static_cast<unsigned long>(p))); }

void require_odd(std::uint64_t p, const char* what) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(what) + ": p must be an odd prime");
}

SeriesSpec<Rational> half_4f3(std::vector<Rational> bottom, std::uint64_t p) {
    return {{R(1, 2), R(1, 2), R(1, 2), R(1, 2)}, std::move(bottom), R(1), static_cast<std::size_t>((p - 1) / 2)};
}

}  // namespace

Rational kilbourn_lhs(std::uint64_t p) {
    require_odd(p, "kilbourn_lhs");
    return pfq_truncated(half_4f3({R(1), R(1), R(1)}, p));
}

Rational thm1_rhs(std::uint64_t p) {
    if (p < 5 || p % 2 == 0) throw std::invalid_argument("thm1_rhs: requires a prime p >= 5");
    return big(p) * pfq_truncated(half_4f3({R(1), R(3, 4), R(5, 4)}, p));
}

Rational vanhamme_lhs(std::uint64_t p) {
    require_odd(p, "vanhamme_lhs");
    SeriesSpec<Rational> spec{{R(5, 4), R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 2)},
                              {R(1, 4), R(1), R(1), R(1), R(1)},
                              R(-1),
                              static_cast<std::size_t>((p - 1) / 2)};
    return pfq_truncated(spec);
}

IdentityCheck<Rational> whipple_c1_check(std::uint64_t n, const Rational& y) {
    const long nn = static_cast<long>(n);
    SeriesSpec<Rational> spec{{R(5, 4), R(1, 2), R(-2 * nn - 1), R(2 * nn + 2), R(1, 2) + y, R(1, 2) - y},
                              {R(1, 4), R(4 * nn + 5, 2), R(-4 * nn - 1, 2), R(1) - y, R(1) + y},
                              R(-1),
                              static_cast<std::size_t>(2 * n + 1)};
    const Rational closed_base = R(-nn) + (y - R(1)) / R(2);
    try {
        validate_bottom(spec);
    } catch (const ZeroDenominatorPochhammer& e) {
        throw PoleParameter("whipple_c1_check: y = " + y.str() + " is a pole (" + e.what() + ")");
    }
    const Rational closed_den = pochhammer(closed_base, 2 * n + 2);
    if (closed_den.is_zero())
        throw PoleParameter("whipple_c1_check: (-n+(y-1)/2)_{2n+2} vanishes at y = " + y.str());

    Rational lhs = pfq_truncated(spec);
    Rational rhs = R(-(4 * nn + 3)) * pochhammer(y / R(2), n + 1) * pochhammer(R(-nn) + y / R(2), n + 1) / closed_den;
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

IdentityCheck<CycloRational> bailey_b1_check(std::uint64_t p, B1Reading reading) {
    require_odd(p, "bailey_b1_check");
    const auto m = (p - 1) / 2;
    const RootTag tag = RootTag::Omega;
    const CycloRational w = CycloRational::zeta(tag);
    const CycloRational w2 = w * w;
    const Rational half_p = big(p) / R(2);
    auto c = [tag](const Rational& r) { return CycloRational(tag, r); };

    const CycloRational t1 = c(R(1, 2));
    const CycloRational t2 = c(R(1, 2)) + w * (-half_p);
    const CycloRational t3 = c(R(1, 2)) + w2 * (-half_p);
    const CycloRational t4 = c((R(1) - big(p)) / R(2));
    const CycloRational b1 = c(R(1)) + w * half_p;
    const CycloRational b2 = c(R(1)) + w2 * half_p;
    const CycloRational b3 = c(R(1) + half_p);

    SeriesSpec<CycloRational> left{{t1, t2, t3, t4}, {b1, b2, b3}, R(1), static_cast<std::size_t>(m)};
    CycloRational lhs = pfq_truncated(left);

    const CycloRational rhs_t2 = reading == B1Reading::Corrected ? t2 : c(R(1, 2)) + w * R(-1, 2);
    SeriesSpec<CycloRational> right{{t1, rhs_t2, t3, t4}, {c(R(1)), c(R(3, 4)), c(R(5, 4))}, R(1),
                                    static_cast<std::size_t>(m)};
    const CycloRational prefactor = big(p) * pochhammer_cyclo(t1, m) * pochhammer_cyclo(t4, m) /
                                    (pochhammer_cyclo(b1, m) * pochhammer_cyclo(b2, m));
    CycloRational rhs = prefactor * pfq_truncated(right);
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

namespace {

void require_three_mod_four(std::uint64_t p, const char* what) {
    if (p < 7 || p % 4 != 3) throw std::invalid_argument(std::string(what) + ": requires p ≡ 3 (mod 4), p >= 7");
}

}  // namespace

Rational c3_closed_form(std::uint64_t p) {
    require_three_mod_four(p, "c3_closed_form");
    const RootTag tag = RootTag::I;
    const CycloRational i = CycloRational::zeta(tag);
    const Rational pr = big(p);
    const CycloRational one_plus_i = CycloRational(tag, R(1), R(1));
    const CycloRational a = i * (-pr / R(4));
    const CycloRational b = CycloRational(tag, R(3, 4)) + one_plus_i * (-pr / R(4));
    const CycloRational d = CycloRational(tag, R(1, 4)) + one_plus_i * (-pr / R(4));
    const CycloRational v = -pr * pochhammer_cyclo(a, (p + 1) / 4) * pochhammer_cyclo(b, (p + 1) / 4) /
                            pochhammer_cyclo(d, (p + 1) / 2);
    return v.to_rational();
}

Rational c3_real_product_form(std::uint64_t p) {
    require_three_mod_four(p, "c3_real_product_form");
    const Rational pr = big(p);
    const Rational shift = -(pr * pr) / R(16);
    Rational num{1};
    for (std::uint64_t j = 1; j <= (p - 3) / 4; ++j) {
        const Rational jj(static_cast<long>(j));
        num *= shift - jj * jj;
    }
    Rational den{1};
    for (std::uint64_t j = 1; j <= (p + 1) / 4; ++j) {
        const Rational h = Rational(static_cast<long>(j)) - R(1, 2);
        den *= shift - h * h;
    }
    return pr.pow(3) / R(16) * num / den;
}

IdentityCheck<Rational> c3_check(std::uint64_t p) {
    require_three_mod_four(p, "c3_check");
    const RootTag tag = RootTag::I;
    const Rational pr = big(p);
    const Rational half_p = pr / R(2);
    auto c = [tag](const Rational& re, const Rational& im = Rational{}) { return CycloRational(tag, re, im); };
    SeriesSpec<CycloRational> spec{
        {c(R(5, 4)), c(R(1, 2)), c((R(1) - pr) / R(2)), c((R(1) + pr) / R(2)), c(R(1, 2), -half_p), c(R(1, 2), half_p)},
        {c(R(1, 4)), c(R(1) - half_p), c(R(1) + half_p), c(R(1), -half_p), c(R(1), half_p)},
        R(-1),
        static_cast<std::size_t>((p - 1) / 2)};
    Rational lhs = pfq_truncated(spec).to_rational();
    Rational rhs = c3_closed_form(p);
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

RamanujanCheck ramanujan_float_check(std::uint64_t terms) {
    if (terms == 0) throw std::invalid_argument("ramanujan_float_check: terms must be >= 1");
    double term = 1.0;
    double sum = 0.0;
    for (std::uint64_t k = 0; k < terms; ++k) {
        sum += term;
        const double kd = static_cast<double>(k);
        const double half = 0.5 + kd;
        const double one = 1.0 + kd;
        term *= -(1.25 + kd) * std::pow(half, 5) / ((0.25 + kd) * std::pow(one, 5));
    }
    const double target = 2.0 / std::pow(std::tgamma(0.75), 4);
    return {sum, target, std::fabs(sum - target)};
}

}  // namespace supercong
