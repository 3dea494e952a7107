#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ydlab {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown by Scalar division when the divisor is zero.
struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("ydlab: division by zero") {}
};

/**
 * Exact element of Q(i): a Gaussian rational re + im*i.
 *
 * The backing rationals are always stored in lowest terms with positive
 * denominator (the cpp_rational invariant), so equality is plain structural
 * equality. Values are immutable in spirit: all operators return new values,
 * which makes Scalar safe to share across threads.
 */
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den) : re_(Rational(num, den)), im_(0) {
        if (den == 0) throw division_by_zero();
    }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.im_ == 0 && b.im_ == 0) return Scalar(a.re_ * b.re_, Rational(0));
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw division_by_zero();
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n,
                      (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    Scalar& operator+=(const Scalar& b) {
        re_ += b.re_;
        im_ += b.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& b) {
        re_ -= b.re_;
        im_ -= b.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const { return Scalar::one() / *this; }

    /// Complex conjugate: re + im*i -> re - im*i.
    Scalar conj() const { return Scalar(re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical report text: "a/b", "c/d*i" or "a/b+c/d*i" ("/1" omitted).
    std::string str() const;

private:
    Rational re_, im_;
};

inline std::string rational_str(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1)
        s += "/" + boost::multiprecision::denominator(q).str();
    return s;
}

inline std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag = rational_str(im_ < 0 ? Rational(-im_) : im_) + "*i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return rational_str(re_) + (im_ < 0 ? "-" : "+") + imag;
}

} // namespace ydlab
