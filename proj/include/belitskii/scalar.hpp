#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace belitskii {

using Rational = mpq_class;

/// An element of the Gaussian rationals Q(i). Both parts are kept in
/// canonical GMP form (reduced, positive denominator), so structural
/// equality is value equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    /// Lexicographic on (re, im). Used to order eigenvalues deterministically.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    Rational re_{0};
    Rational im_{0};
};

std::strong_ordering scalar_total_order(const Scalar& a, const Scalar& b);

/// Grammar: sign? rat (sign rat? "i")? | sign? rat? "i", rat = int ("/" posint)?.
/// No whitespace inside the token.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace belitskii
