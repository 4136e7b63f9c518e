#include "supercong/variety.hpp"

#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/kernels.hpp"

namespace supercong {

namespace {

// 16 p^3 must fit in int64 for the convolution sums.
constexpr std::uint64_t kMaxCountPrime = 800000;

void require_odd_prime_arg(std::uint64_t p, const char* what) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(what) + ": p must be an odd prime");
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = kernels::mul_mod(r, b, m);
        b = kernels::mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

int legendre(std::int64_t a, std::uint64_t p) {
    require_odd_prime_arg(p, "legendre");
    const auto sp = static_cast<std::int64_t>(p);
    const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

FiberDistribution fiber_counts(std::uint64_t p) {
    require_odd_prime_arg(p, "fiber_counts");
    FiberDistribution d{p, std::vector<std::int64_t>(p, 0)};
    for (std::uint64_t t = 0; t < p; ++t) {
        // x^2 - t x + 1 = 0 has discriminant t^2 - 4; x = 0 is never a root.
        const std::uint64_t disc = (t * t % p + p - 4 % p) % p;
        d.counts[t] = disc == 0 ? 1 : 1 + legendre(static_cast<std::int64_t>(disc), p);
    }
    return d;
}

std::int64_t count_N(std::uint64_t p, ExecPolicy policy) {
    require_odd_prime_arg(p, "count_N");
    if (p > kMaxCountPrime) throw TooLarge("count_N: p = " + std::to_string(p) + " overflows 64-bit sums");
    const FiberDistribution d = fiber_counts(p);
    const std::vector<std::int64_t> pairs = policy == ExecPolicy::Parallel
                                                ? kernels::parallel::cyclic_self_convolution(d.counts)
                                                : kernels::serial::cyclic_self_convolution(d.counts);
    std::int64_t n = pairs[0] * pairs[0];
    for (std::uint64_t s = 1; s < p; ++s) n += pairs[s] * pairs[p - s];
    return n;
}

std::int64_t brute_force_N(std::uint64_t p) {
    require_odd_prime_arg(p, "brute_force_N");
    if (p > 13) throw TooLarge("brute_force_N: p = " + std::to_string(p) + " > 13");
    std::vector<std::uint64_t> g(p, 0);  // g[x] = x + 1/x
    for (std::uint64_t x = 1; x < p; ++x)
        for (std::uint64_t inv = 1; inv < p; ++inv)
            if (x * inv % p == 1) g[x] = (x + inv) % p;
    std::int64_t n = 0;
    for (std::uint64_t x = 1; x < p; ++x)
        for (std::uint64_t y = 1; y < p; ++y)
            for (std::uint64_t z = 1; z < p; ++z)
                for (std::uint64_t w = 1; w < p; ++w)
                    if ((g[x] + g[y] + g[z] + g[w]) % p == 0) ++n;
    return n;
}

std::int64_t trace_from_count(std::uint64_t p, std::int64_t n_points) {
    const auto sp = static_cast<std::int64_t>(p);
    return sp * sp * sp - 2 * sp * sp - 7 - n_points;
}

bool check_trace_relation(std::uint64_t p, std::int64_t a_p, ExecPolicy policy) {
    return a_p == trace_from_count(p, count_N(p, policy));
}

}  // namespace supercong
