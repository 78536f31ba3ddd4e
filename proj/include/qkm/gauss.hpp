// Gaussian rationals a + bi, the coefficient field for all module computations.
#ifndef QKM_GAUSS_HPP
#define QKM_GAUSS_HPP

#include <stdexcept>
#include <string>

#include "qkm/rational.hpp"

namespace qkm {

class Gauss {
public:
    Gauss() = default;
    Gauss(Rational re) : re_(std::move(re)) {}
    Gauss(long long re) : re_(re) {}
    Gauss(int re) : re_(re) {}
    Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return Gauss(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    Gauss conj() const { return Gauss(re_, -im_); }
    Rational normSq() const { return re_ * re_ + im_ * im_; }

    friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }
    friend Gauss operator+(const Gauss& a, const Gauss& b) {
        return Gauss(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gauss operator-(const Gauss& a, const Gauss& b) {
        return Gauss(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return Gauss(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    Gauss inv() const {
        if (isZero()) throw std::domain_error("Gauss: division by zero");
        Rational n = normSq();
        return Gauss(re_ / n, -im_ / n);
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inv(); }
    Gauss& operator+=(const Gauss& b) { *this = *this + b; return *this; }
    Gauss& operator-=(const Gauss& b) { *this = *this - b; return *this; }
    Gauss& operator*=(const Gauss& b) { *this = *this * b; return *this; }

    friend bool operator==(const Gauss& a, const Gauss& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    std::string toString() const {
        if (im_.isZero()) return re_.toString();
        std::string s;
        if (!re_.isZero()) {
            s = re_.toString();
            if (im_.sign() > 0) s += "+";
        }
        if (im_ == Rational(1)) s += "i";
        else if (im_ == Rational(-1)) s += "-i";
        else s += im_.toString() + "i";
        return s;
    }

private:
    Rational re_, im_;
};

}  // namespace qkm

#endif
