#include "supercong/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supercong::kernels {

namespace serial {

std::uint64_t unit_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t acc = 1;
    if (lo == 0) lo = 1;
    // Walk runs of units between consecutive multiples of p.
    std::uint64_t j = lo;
    while (j < hi) {
        if (j % p == 0) {
            ++j;
            continue;
        }
        const std::uint64_t run_end = std::min(hi, (j / p + 1) * p);
        if (m < (std::uint64_t{1} << 32)) {
            for (; j < run_end; ++j) acc = acc * (j % m) % m;
        } else {
            for (; j < run_end; ++j) acc = mul_mod(acc, j % m, m);
        }
    }
    return acc;
}

std::vector<std::int64_t> cyclic_self_convolution(std::span<const std::int64_t> c) {
    const std::size_t n = c.size();
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t t1 = 0; t1 < n; ++t1) {
        if (c[t1] == 0) continue;
        for (std::size_t t2 = 0; t2 < n; ++t2) {
            std::size_t s = t1 + t2;
            if (s >= n) s -= n;
            out[s] += c[t1] * c[t2];
        }
    }
    return out;
}

}  // namespace serial

namespace parallel {

std::uint64_t unit_product_mod(std::uint64_t lo, std::uint64_t hi, std::uint64_t p, std::uint64_t m, int threads) {
    if (hi <= lo) return m == 1 ? 0 : 1;
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#else
    const int nt = 1;
#endif
    const std::uint64_t len = hi - lo;
    // Small ranges are not worth the fork.
    if (nt <= 1 || len < (std::uint64_t{1} << 16)) return serial::unit_product_mod(lo, hi, p, m);

    std::vector<std::uint64_t> partial(static_cast<std::size_t>(nt), 1);
    const std::uint64_t chunk = (len + static_cast<std::uint64_t>(nt) - 1) / static_cast<std::uint64_t>(nt);
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int t = 0; t < nt; ++t) {
        const std::uint64_t a = lo + static_cast<std::uint64_t>(t) * chunk;
        const std::uint64_t b = std::min(hi, a + chunk);
        partial[static_cast<std::size_t>(t)] = a < b ? serial::unit_product_mod(a, b, p, m) : 1;
    }
    std::uint64_t acc = 1 % m;
    for (std::uint64_t v : partial) acc = mul_mod(acc, v, m);
    return acc;
}

std::vector<std::int64_t> cyclic_self_convolution(std::span<const std::int64_t> c, int threads) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
    std::vector<std::int64_t> out(c.size(), 0);
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#else
    const int nt = 1;
    (void)threads;
#endif
    // Gather form: each output slot s is owned by one thread.
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        std::int64_t acc = 0;
        for (std::ptrdiff_t t1 = 0; t1 < n; ++t1) {
            std::ptrdiff_t t2 = s - t1;
            if (t2 < 0) t2 += n;
            acc += c[static_cast<std::size_t>(t1)] * c[static_cast<std::size_t>(t2)];
        }
        out[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

}  // namespace parallel

}  // namespace supercong::kernels
