#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version and an
// OpenMP version; both must return identical results for identical inputs.

#include <cstdint>
#include <span>
#include <vector>

namespace supercong::kernels {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

namespace serial {

/// prod_{lo <= j < hi, p does not divide j} j  (mod m).
std::uint64_t unit_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p, std::uint64_t m);

/// A(s) = sum_{t1 + t2 == s (mod n)} c(t1) c(t2), n = c.size().
std::vector<std::int64_t> cyclic_self_convolution(std::span<const std::int64_t> c);

}  // namespace serial

namespace parallel {

/// Same contract as serial::unit_product_mod; threads <= 0 means the OpenMP default.
std::uint64_t unit_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p, std::uint64_t m,
                               int threads = 0);

std::vector<std::int64_t> cyclic_self_convolution(std::span<const std::int64_t> c, int threads = 0);

}  // namespace parallel

}  // namespace supercong::kernels
