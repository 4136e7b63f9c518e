#pragma once

#include <cstdint>

#include "supercong/cyclo.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, std::uint64_t n);
CycloRational pochhammer_cyclo(const CycloRational& a, std::uint64_t n);

/// prod_{j<k} ((u+j)^3 + v^3 p^3): the rational value of
/// (u+vp)_k (u+vp*omega)_k (u+vp*omega^2)_k.
Rational collapsed_poch3(const Rational& u, const Rational& v, std::uint64_t p, std::uint64_t k);

/// prod_{j<k} ((u+j)^4 - v^4 p^4): the rational value of
/// (u+vp)_k (u-vp)_k (u+vpi)_k (u-vpi)_k.
Rational collapsed_poch4(const Rational& u, const Rational& v, std::uint64_t p, std::uint64_t k);

/// sum_{j=1}^{(p-1)/2} 1/j^2.
Rational half_harmonic2(std::uint64_t p);

}  // namespace supercong
