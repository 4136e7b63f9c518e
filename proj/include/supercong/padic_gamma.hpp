#pragma once

#include <cstdint>
#include <vector>

#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

namespace supercong {

enum class ExecPolicy { Serial, Parallel };

/// s_p(x): the representative of x mod p in {1, ..., p}. Throws NegativeValuation.
std::uint64_t sp(const Rational& x, std::uint64_t p);

/// Morita p-adic Gamma at precision p^k.
///
/// Gamma_p(m) = (-1)^m prod_{0<j<m, p∤j} j for integers m >= 0, and for
/// p-integral x it is evaluated at the lift m in [0, p^k) with m ≡ x (mod p^k).
/// Prefix products are checkpointed every `stride` integers, so several
/// arguments at the same (p, k) share one pass. Not internally synchronized:
/// keep one evaluator per worker.
class GammaEvaluator {
public:
    GammaEvaluator(std::uint64_t p, unsigned k, ExecPolicy policy = ExecPolicy::Serial, bool use_cache = true);

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    ResidueInt at_integer(std::uint64_t m);
    ResidueInt operator()(const Rational& x);

    std::size_t checkpoints() const noexcept { return checkpoints_.size(); }

private:
    std::uint64_t unit_product(std::uint64_t lo, std::uint64_t hi) const;
    std::uint64_t unit_prefix(std::uint64_t m);

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t modulus_;
    ExecPolicy policy_;
    bool use_cache_;
    std::uint64_t stride_;
    // checkpoints_[i] = prod_{0<j<i*stride, p∤j} j mod p^k
    std::vector<std::uint64_t> checkpoints_;
};

/// Definitional product at a nonnegative integer, reduced mod p^k. O(m).
ResidueInt gamma_p_int(std::uint64_t m, std::uint64_t p, unsigned k);

/// Gamma_p(x) mod p^k for p-integral rational x. O(p^k).
ResidueInt gamma_p(const Rational& x, std::uint64_t p, unsigned k);

}  // namespace supercong
