#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "jchain/error.hpp"

namespace jchain {

using Rational = boost::multiprecision::mpq_rational;

/// Exact complex number re + im*i with arbitrary-precision rational parts.
/// Values are always stored canonically (lowest terms, positive denominator);
/// every operation is exact.
class Scalar {
public:
    Scalar() = default;
    Scalar(int value) : re_(value) {} // NOLINT: implicit for literals
    explicit Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// Parses the grammar  SCALAR := RAT | [RAT (+|-)] RAT 'i'
    /// with RAT := ['-'] digits ['/' positive-digits].
    /// Throws ParseError on malformed text or a zero denominator.
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2 = re^2 + im^2 (a nonnegative rational).
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const = default;

    /// Canonical rendering: "a/b", "c/di", or "a/b+c/di" / "a/b-c/di",
    /// integer parts without the "/1". Round-trips through parse().
    std::string str() const;

private:
    Rational re_{};
    Rational im_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace jchain
