#pragma once

#include <cstdint>
#include <vector>

#include "supercong/padic_gamma.hpp"

namespace supercong {

/// Quadratic character of a mod an odd prime p: -1, 0 or 1.
int legendre(std::int64_t a, std::uint64_t p);

/// c(t) = #{x in F_p^* : x + 1/x = t}.
struct FiberDistribution {
    std::uint64_t p;
    std::vector<std::int64_t> counts;
};

FiberDistribution fiber_counts(std::uint64_t p);

/// Points on x+1/x+y+1/y+z+1/z+w+1/w = 0 with x, y, z, w in F_p^*.
/// A(s) = sum_{t1+t2=s} c(t1)c(t2), then N = sum_s A(s) A(-s).
std::int64_t count_N(std::uint64_t p, ExecPolicy policy = ExecPolicy::Serial);

/// Direct enumeration over (F_p^*)^4. Throws TooLarge for p > 13.
std::int64_t brute_force_N(std::uint64_t p);

/// a_p == p^3 - 2p^2 - 7 - N(p).
bool check_trace_relation(std::uint64_t p, std::int64_t a_p, ExecPolicy policy = ExecPolicy::Serial);

/// p^3 - 2p^2 - 7 - N(p).
std::int64_t trace_from_count(std::uint64_t p, std::int64_t n_points);

}  // namespace supercong
