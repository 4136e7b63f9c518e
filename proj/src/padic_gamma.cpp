#include "supercong/padic_gamma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/kernels.hpp"

namespace supercong {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::uint64_t kCheckpointCount = 256;

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (m > kMaxModulus / p)
            throw TooLarge("p^k = " + std::to_string(p) + "^" + std::to_string(k) + " exceeds the word-size kernel");
        m *= p;
    }
    return m;
}

ResidueInt signed_result(std::uint64_t m, std::uint64_t units, std::uint64_t p, unsigned k) {
    ResidueInt r(p, k, BigInt(static_cast<unsigned long>(units)));
    return (m % 2 == 1) ? -r : r;
}

}  // namespace

std::uint64_t sp(const Rational& x, std::uint64_t p) {
    const ResidueInt r = reduce_mod(x, p, 1);
    const std::uint64_t v = r.value().get_ui();
    return v == 0 ? p : v;
}

GammaEvaluator::GammaEvaluator(std::uint64_t p, unsigned k, ExecPolicy policy, bool use_cache)
    : p_(p), k_(k), modulus_(0), policy_(policy), use_cache_(use_cache), stride_(1), checkpoints_{1} {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("GammaEvaluator: p must be an odd prime");
    if (k == 0) throw std::invalid_argument("GammaEvaluator: k must be positive");
    modulus_ = checked_power(p, k);
    stride_ = std::max<std::uint64_t>(p, modulus_ / kCheckpointCount);
    checkpoints_[0] = 1 % modulus_;
}

std::uint64_t GammaEvaluator::unit_product(std::uint64_t lo, std::uint64_t hi) const {
    if (policy_ == ExecPolicy::Parallel) return kernels::parallel::unit_product_mod(lo, hi, p_, modulus_);
    return kernels::serial::unit_product_mod(lo, hi, p_, modulus_);
}

std::uint64_t GammaEvaluator::unit_prefix(std::uint64_t m) {
    if (!use_cache_) return unit_product(1, m);
    const std::uint64_t block = m / stride_;
    while (checkpoints_.size() <= block) {
        const std::uint64_t lo = (checkpoints_.size() - 1) * stride_;
        const std::uint64_t piece = unit_product(lo, lo + stride_);
        checkpoints_.push_back(kernels::mul_mod(checkpoints_.back(), piece, modulus_));
    }
    const std::uint64_t base = block * stride_;
    return kernels::mul_mod(checkpoints_[block], unit_product(base, m), modulus_);
}

ResidueInt GammaEvaluator::at_integer(std::uint64_t m) { return signed_result(m, unit_prefix(m), p_, k_); }

ResidueInt GammaEvaluator::operator()(const Rational& x) {
    const ResidueInt lift = reduce_mod(x, p_, k_);
    return at_integer(lift.value().get_ui());
}

ResidueInt gamma_p_int(std::uint64_t m, std::uint64_t p, unsigned k) {
    const std::uint64_t modulus = checked_power(p, k);
    return signed_result(m, kernels::serial::unit_product_mod(1, m, p, modulus), p, k);
}

ResidueInt gamma_p(const Rational& x, std::uint64_t p, unsigned k) {
    GammaEvaluator g(p, k, ExecPolicy::Serial, false);
    return g(x);
}

}  // namespace supercong
