#include "doctest.h"

#include "supercong/errors.hpp"
#include "supercong/eta.hpp"

using namespace supercong;

namespace {

// (1 - q^step)^4 written out from the binomial coefficients, truncated at bound.
IntSeries binomial4(std::size_t step, std::size_t bound) {
    IntSeries s(bound);
    const long c[5] = {1, -4, 6, -4, 1};
    for (std::size_t e = 0; e <= 4 && e * step <= bound; ++e) s[e * step] = c[e];
    return s;
}

}  // namespace

TEST_CASE("eta_factor_series") {
    const IntSeries s = eta_factor_series(2, 4, 6);
    const long expected[7] = {1, 0, -4, 0, 2, 0, 8};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(s[n] == expected[n]);

    const IntSeries constant = eta_factor_series(9, 4, 6);
    CHECK(constant == IntSeries::one(6));
    for (std::size_t m = 2; m <= 5; ++m) CHECK(eta_factor_series(m, 3, 20)[1] == 0);
}

TEST_CASE("f expansion equals an independent dense product") {
    // q * prod (1-q^{2n})^4 (1-q^{4n})^4 via generic dense multiplication.
    const std::size_t bound = 40;
    IntSeries g = IntSeries::one(bound - 1);
    for (std::size_t step = 2; step <= bound - 1; step += 2) g = g * binomial4(step, bound - 1);
    for (std::size_t step = 4; step <= bound - 1; step += 4) g = g * binomial4(step, bound - 1);
    const auto a = f_coefficients(bound);
    REQUIRE(a.size() == bound);
    for (std::size_t n = 1; n <= bound; ++n) CHECK(a[n - 1] == g[n - 1]);
}

TEST_CASE("a(n) values") {
    const EtaTable t(200);
    CHECK(t.a(1) == 1);
    CHECK(t.a(3) == -4);
    CHECK(t.a(5) == -2);
    CHECK(t.a(7) == 24);
    for (std::size_t n = 2; n <= 200; n += 2) CHECK(t.a(n) == 0);
    CHECK(t.a(15) == t.a(3) * t.a(5));
    CHECK(t.a(21) == t.a(3) * t.a(7));
    CHECK(a_p(7, t) == 24);
    CHECK(t.a_int64(7) == 24);
    CHECK_THROWS_AS(t.a(0), OutOfRange);
    CHECK_THROWS_AS(t.a(201), OutOfRange);
    CHECK_THROWS_AS(a_p(211, t), OutOfRange);
}

TEST_CASE("prefix stability") {
    const auto small = f_coefficients(50);
    const auto large = f_coefficients(300);
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("IntSeries bounds must match") {
    CHECK_THROWS_AS(IntSeries::one(3) * IntSeries::one(4), std::invalid_argument);
    CHECK_THROWS_AS(f_coefficients(0), std::invalid_argument);
}
