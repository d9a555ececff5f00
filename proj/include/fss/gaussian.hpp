#pragma once

#include <gmpxx.h>
#include <string>
#include <iosfwd>

namespace fss {

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// Values are kept canonical (reduced, positive denominator) at all times.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }
    /// true for units +-1, +-i (pivoting prefers these: no coefficient growth)
    bool isUnit() const;

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    /// re^2 + im^2, the square norm; zero iff *this is zero.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const;

    /// Canonical "p/q" form of a rational, q > 0, gcd(p,q) = 1.
    static std::string ratStr(const mpq_class& q);
    static mpq_class parseRat(const std::string& s);

    /// Human-readable: "0", "1", "-2/3", "i", "1/2-3i", ...
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

private:
    mpq_class re_, im_;
};

} // namespace fss
