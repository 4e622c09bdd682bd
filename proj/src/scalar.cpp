#include "belitskii/scalar.hpp"

#include <cctype>
#include <ostream>

#include "belitskii/error.hpp"

namespace belitskii {

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::Singular, "division by zero scalar");
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw Error(ErrorKind::Singular, "division by zero scalar");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0)
        c = cmp(a.im_, b.im_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering scalar_total_order(const Scalar& a, const Scalar& b) { return a <=> b; }

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    [[noreturn]] void fail(const char* why) const {
        throw Error(ErrorKind::MalformedScalar, "'" + std::string(text) + "': " + why);
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }

    int sign() {
        if (accept('-'))
            return -1;
        accept('+');
        return 1;
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    mpz_class digits() {
        size_t start = pos;
        while (at_digit())
            ++pos;
        if (pos == start)
            fail("expected digits");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    Rational rat() {
        mpz_class num = digits();
        if (!accept('/'))
            return Rational(num);
        mpz_class den = digits();
        if (den == 0)
            throw Error(ErrorKind::ZeroDenominator, "'" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
};

} // namespace

Scalar parse_scalar(std::string_view text) {
    Cursor cur{text};
    if (text.empty())
        cur.fail("empty token");

    int s1 = cur.sign();
    if (cur.accept('i')) {
        if (!cur.done())
            cur.fail("trailing characters after 'i'");
        return Scalar(Rational(0), Rational(s1));
    }
    Rational first = cur.rat();
    first *= s1;
    if (cur.done())
        return Scalar(first);
    if (cur.accept('i')) {
        if (!cur.done())
            cur.fail("trailing characters after 'i'");
        return Scalar(Rational(0), first);
    }
    if (cur.peek() != '+' && cur.peek() != '-')
        cur.fail("expected sign before imaginary part");
    int s2 = cur.sign();
    Rational second(1);
    if (cur.at_digit())
        second = cur.rat();
    if (!cur.accept('i'))
        cur.fail("imaginary part must end in 'i'");
    if (!cur.done())
        cur.fail("trailing characters");
    second *= s2;
    return Scalar(first, second);
}

std::string to_string(const Scalar& s) {
    if (s.is_real())
        return s.re().get_str();
    std::string imag;
    if (s.im() == 1)
        imag = "i";
    else if (s.im() == -1)
        imag = "-i";
    else
        imag = s.im().get_str() + "i";
    if (sgn(s.re()) == 0)
        return imag;
    std::string out = s.re().get_str();
    if (sgn(s.im()) > 0)
        out += '+';
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

} // namespace belitskii
