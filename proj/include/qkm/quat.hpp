// Exact quaternions q = z + Jw over the Gaussian rationals (left-J storage),
// with the involutions sigma, tau and the four-marker real decomposition.
#ifndef QKM_QUAT_HPP
#define QKM_QUAT_HPP

#include <string>

#include "qkm/gauss.hpp"

namespace qkm {

class Quat {
public:
    Quat() = default;
    Quat(Gauss z) : z_(std::move(z)) {}
    Quat(long long z) : z_(z) {}
    Quat(int z) : z_(z) {}
    Quat(Gauss z, Gauss w) : z_(std::move(z)), w_(std::move(w)) {}

    static Quat i() { return Quat(Gauss::i()); }
    static Quat j() { return Quat(Gauss(0), Gauss(1)); }
    static Quat ji() { return Quat(Gauss(0), Gauss::i()); }

    const Gauss& z() const { return z_; }
    const Gauss& w() const { return w_; }
    bool isZero() const { return z_.isZero() && w_.isZero(); }

    friend Quat operator-(const Quat& a) { return Quat(-a.z_, -a.w_); }
    friend Quat operator+(const Quat& a, const Quat& b) { return Quat(a.z_ + b.z_, a.w_ + b.w_); }
    friend Quat operator-(const Quat& a, const Quat& b) { return Quat(a.z_ - b.z_, a.w_ - b.w_); }

    // (z1+Jw1)(z2+Jw2) = (z1 z2 - conj(w1) w2) + J(conj(z1) w2 + w1 z2)
    friend Quat operator*(const Quat& a, const Quat& b) {
        return Quat(a.z_ * b.z_ - a.w_.conj() * b.w_,
                    a.z_.conj() * b.w_ + a.w_ * b.z_);
    }
    Quat& operator+=(const Quat& b) { *this = *this + b; return *this; }
    Quat& operator-=(const Quat& b) { *this = *this - b; return *this; }
    Quat& operator*=(const Quat& b) { *this = *this * b; return *this; }

    friend bool operator==(const Quat& a, const Quat& b) { return a.z_ == b.z_ && a.w_ == b.w_; }
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

    std::string toString() const {
        if (w_.isZero()) return z_.toString();
        std::string s;
        if (!z_.isZero()) s = z_.toString() + " + ";
        s += "J(" + w_.toString() + ")";
        return s;
    }

private:
    Gauss z_, w_;
};

// sigma(z + Jw) = z - Jw; an algebra automorphism, sigma^2 = id, J sigma = -sigma J.
inline Quat sigma(const Quat& q) { return Quat(q.z(), -q.w()); }

// tau(z + Jw) = conj(z) - J conj(w); tau^2 = id, sigma tau = tau sigma.
inline Quat tau(const Quat& q) { return Quat(q.z().conj(), -q.w().conj()); }

// The four independent real directions 1, i, J, Ji.
enum class Marker : int { One = 0, I = 1, J = 2, Ji = 3 };

inline Quat markerValue(Marker m) {
    switch (m) {
        case Marker::One: return Quat(1);
        case Marker::I: return Quat::i();
        case Marker::J: return Quat::j();
        case Marker::Ji: return Quat::ji();
    }
    return Quat(0);
}

struct SignedMarker {
    int sign;  // +1 or -1
    Marker marker;
};

// Product of two markers as quaternion units: always +/- another marker.
inline SignedMarker markerMul(Marker a, Marker b) {
    Quat p = markerValue(a) * markerValue(b);
    for (Marker m : {Marker::One, Marker::I, Marker::J, Marker::Ji}) {
        if (p == markerValue(m)) return {1, m};
        if (p == -markerValue(m)) return {-1, m};
    }
    throw std::logic_error("markerMul: product is not a signed marker");
}

inline const char* markerName(Marker m) {
    switch (m) {
        case Marker::One: return "1";
        case Marker::I: return "i";
        case Marker::J: return "J";
        case Marker::Ji: return "Ji";
    }
    return "?";
}

}  // namespace qkm

#endif
