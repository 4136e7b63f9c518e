#include "doctest.h"

#include <cmath>

#include "supercong/errors.hpp"
#include "supercong/eta.hpp"
#include "supercong/hypergeom.hpp"
#include "supercong/residue.hpp"
#include "supercong/checks.hpp"
#include "test_support.hpp"

using namespace supercong;
using supercong::testing::Gen;

namespace {

SeriesSpec<Rational> kilbourn_spec(std::size_t n) {
    const Rational h(1, 2);
    return {{h, h, h, h}, {Rational(1), Rational(1), Rational(1)}, Rational(1), n};
}

SeriesSpec<Rational> vanhamme_spec(std::size_t n) {
    const Rational h(1, 2);
    return {{Rational(5, 4), h, h, h, h, h}, {Rational(1, 4), Rational(1), Rational(1), Rational(1), Rational(1)},
            Rational(-1), n};
}

}  // namespace

TEST_CASE("pfq_truncated small cases") {
    CHECK(pfq_truncated(kilbourn_spec(1)) == Rational(17, 16));
    CHECK(pfq_truncated(kilbourn_spec(0)) == Rational(1));
    CHECK(pfq_truncated(vanhamme_spec(1)) == Rational(27, 32));
    CHECK(pfq_truncated(vanhamme_spec(0)) == Rational(1));
}

TEST_CASE("a vanishing bottom Pochhammer is reported") {
    SeriesSpec<Rational> spec{{Rational(1, 2)}, {Rational(-2)}, Rational(1), 5};
    try {
        (void)pfq_truncated(spec);
        FAIL("expected ZeroDenominatorPochhammer");
    } catch (const ZeroDenominatorPochhammer& e) {
        CHECK(e.term() == 3);
        CHECK(e.param() == 0);
    }
    spec.terms = 2;
    CHECK_NOTHROW((void)pfq_truncated(spec));
}

TEST_CASE("term recurrence agrees with from-scratch evaluation") {
    Gen gen(0x4f3a01);
    for (int trial = 0; trial < 60; ++trial) {
        SeriesSpec<Rational> spec;
        const auto r = gen.integer(1, 4);
        for (long i = 0; i < r; ++i) spec.top.push_back(gen.rational(20, 9));
        for (long i = 0; i + 1 < r; ++i) {
            Rational b = gen.rational(20, 9);
            if (b.is_integer() && b.sign() <= 0) b += Rational(1, 2);
            spec.bottom.push_back(b);
        }
        spec.z = gen.integer(0, 1) == 0 ? Rational(1) : Rational(-1);
        spec.terms = static_cast<std::size_t>(gen.integer(0, 12));
        const Rational fast = pfq_truncated(spec);
        CHECK(fast == pfq_from_scratch(spec));
        SeriesSpec<Rational> longer = spec;
        longer.terms += 1;
        CHECK(fast + pfq_term(spec, spec.terms + 1) == pfq_truncated(longer));
    }
}

TEST_CASE("cyclotomic series agree with from-scratch evaluation") {
    const auto i = CycloRational::zeta(RootTag::I);
    const CycloRational one(RootTag::I, Rational(1));
    SeriesSpec<CycloRational> spec{{one * Rational(1, 2) + i * Rational(3, 2), one * Rational(1, 2) - i * Rational(3, 2)},
                                   {one + i, one - i},
                                   Rational(-1),
                                   9};
    const CycloRational v = pfq_truncated(spec);
    CHECK(v == pfq_from_scratch(spec));
    CHECK(v.is_real());
}

TEST_CASE("kilbourn_lhs") {
    CHECK(kilbourn_lhs(3) == Rational(17, 16));
    CHECK(reduce_mod(kilbourn_lhs(3), 3, 3).value() == 23);
    CHECK(pfq_term(kilbourn_spec(5), 0) == Rational(1));
}

TEST_CASE("thm1_rhs") {
    CHECK_THROWS_AS(thm1_rhs(3), std::invalid_argument);
    const Rational v = thm1_rhs(5);
    CHECK(vp(v, 5) >= 0);
    const EtaTable eta(10);
    CHECK(a_p(5, eta) == -2);
    CHECK(reduce_mod(v, 5, 3) == reduce_mod(Rational(a_p(5, eta)), 5, 3));
    for (std::uint64_t p : {13, 17, 29, 37, 41, 53}) CHECK(vp(thm1_rhs(p), p) >= 0);
}

TEST_CASE("vanhamme_lhs") {
    CHECK(vanhamme_lhs(3) == Rational(27, 32));
    CHECK(vp(vanhamme_lhs(3), 3) == 3);
    CHECK(vanhamme_lhs(5) == Rational(29835, 32768));
    CHECK(vp(vanhamme_lhs(5), 5) == 1);
    for (std::uint64_t p : {7, 11, 19, 23, 31, 43, 47, 59}) CHECK(vp(vanhamme_lhs(p), p) >= 3);
}

TEST_CASE("whipple_c1_check") {
    auto r = whipple_c1_check(0, Rational(1, 3));
    CHECK(r.lhs == Rational(3, 8));
    CHECK(r.rhs == Rational(3, 8));
    CHECK(r.equal);
    // n = 0 closed form: 3y^2 / (1 - y^2).
    for (const Rational& y : {Rational(1, 3), Rational(-2, 7), Rational(5, 2), Rational(9, 4)}) {
        const auto c = whipple_c1_check(0, y);
        CHECK(c.lhs == Rational(3) * y * y / (Rational(1) - y * y));
        CHECK(c.equal);
    }
    r = whipple_c1_check(0, Rational(0));
    CHECK(r.lhs == Rational(0));
    CHECK(r.rhs == Rational(0));
    CHECK(whipple_c1_check(1, Rational(1, 5)).equal);

    CHECK_THROWS_AS(whipple_c1_check(0, Rational(1)), PoleParameter);
    CHECK_THROWS_AS(whipple_c1_check(2, Rational(-1)), PoleParameter);
    CHECK_THROWS_AS(whipple_c1_check(1, Rational(3)), PoleParameter);
    CHECK_THROWS_AS(whipple_c1_check(3, Rational(-5)), PoleParameter);

    for (std::uint64_t n = 0; n <= kC1MaxN; ++n)
        for (const Rational& y : c1_sample_ys()) CHECK(whipple_c1_check(n, y).equal);
}

TEST_CASE("bailey_b1_check") {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        const auto r = bailey_b1_check(p);
        CHECK(r.equal);
        CHECK((r.lhs - r.rhs).is_zero());
    }
    // The printed parameter (1-omega)/2 does not give an identity.
    for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK_FALSE(bailey_b1_check(p, B1Reading::Printed).equal);
    CHECK_THROWS_AS(bailey_b1_check(4), std::invalid_argument);
}

TEST_CASE("c3_check") {
    for (std::uint64_t p : {7, 11, 19, 23, 31, 43, 47}) {
        const auto r = c3_check(p);
        CHECK(r.equal);
        CHECK(c3_closed_form(p) == c3_real_product_form(p));
    }
    CHECK_THROWS_AS(c3_check(5), std::invalid_argument);
    CHECK_THROWS_AS(c3_check(3), std::invalid_argument);
}

TEST_CASE("ramanujan_float_check") {
    CHECK(ramanujan_float_check(1).partial == 1.0);
    const auto r = ramanujan_float_check(10000);
    CHECK(std::fabs(r.target - 0.886941168578115) < 1e-12);
    // 40-digit partial sum of the first 10^4 terms.
    CHECK(std::fabs(r.partial - 0.8869410542451157625) < 1e-12);
    CHECK(r.abs_err < 1e-6);
    CHECK_THROWS_AS(ramanujan_float_check(0), std::invalid_argument);
}
