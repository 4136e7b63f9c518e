#include "supercong/cyclo.hpp"

#include <ostream>
#include <stdexcept>

#include "supercong/errors.hpp"

namespace supercong {

void CycloRational::require_same_field(const CycloRational& o) const {
    if (tag_ != o.tag_) throw std::invalid_argument("CycloRational: mixing Q(i) and Q(omega) elements");
}

CycloRational CycloRational::conj() const {
    if (tag_ == RootTag::I) return {tag_, re_, -im_};
    // omega -> omega^2 = -1 - omega
    return {tag_, re_ - im_, -im_};
}

Rational CycloRational::norm() const {
    if (tag_ == RootTag::I) return re_ * re_ + im_ * im_;
    return re_ * re_ - re_ * im_ + im_ * im_;
}

CycloRational CycloRational::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("CycloRational: inverse of zero");
    CycloRational c = conj();
    return {tag_, c.re_ / n, c.im_ / n};
}

Rational CycloRational::to_rational() const {
    if (!im_.is_zero()) throw NonRealResult("expected a rational value, got " + str());
    return re_;
}

std::string CycloRational::str() const {
    const char* z = tag_ == RootTag::I ? "i" : "w";
    return re_.str() + (im_.sign() < 0 ? " - " : " + ") + (im_.sign() < 0 ? (-im_).str() : im_.str()) + "*" + z;
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
    require_same_field(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) {
    require_same_field(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

CycloRational& CycloRational::operator*=(const CycloRational& o) {
    require_same_field(o);
    Rational bd = im_ * o.im_;
    Rational re = re_ * o.re_ - bd;
    Rational im = re_ * o.im_ + im_ * o.re_;
    if (tag_ == RootTag::Omega) im -= bd;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

CycloRational& CycloRational::operator/=(const CycloRational& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

CycloRational& CycloRational::operator*=(const Rational& r) {
    re_ *= r;
    im_ *= r;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const CycloRational& x) { return os << x.str(); }

}  // namespace supercong
