#include "jchain/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace jchain {

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) {
        throw Error("scalar division by zero");
    }
    // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
    Rational n2 = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

using Integer = boost::multiprecision::mpz_int;

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

// RAT := ['-'] digits ['/' positive-digits]
Rational parse_rat(Cursor& c) {
    const size_t start = c.pos;
    bool negative = false;
    if (!c.done() && c.peek() == '-') {
        negative = true;
        ++c.pos;
    }
    size_t digits_begin = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        ++c.pos;
    }
    if (c.pos == digits_begin) {
        throw ParseError("expected digits at position " + std::to_string(start) +
                         " in scalar literal");
    }
    Integer num(std::string(c.text.substr(digits_begin, c.pos - digits_begin)));
    Integer den = 1;
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        size_t den_begin = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            ++c.pos;
        }
        if (c.pos == den_begin) {
            throw ParseError("expected denominator digits in scalar literal");
        }
        den = Integer(std::string(c.text.substr(den_begin, c.pos - den_begin)));
        if (den == 0) {
            throw ParseError("zero denominator in scalar literal");
        }
    }
    if (negative) {
        num = -num;
    }
    // Division canonicalizes (lowest terms, positive denominator); the
    // mpq string constructor does not.
    return Rational(num) / Rational(den);
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    Cursor c{text.substr(begin, end - begin)};
    if (c.done()) {
        throw ParseError("empty scalar literal");
    }

    Rational first = parse_rat(c);
    if (c.done()) {
        return Scalar(std::move(first)); // pure real
    }
    if (c.peek() == 'i') {
        ++c.pos;
        if (!c.done()) {
            throw ParseError("trailing characters after imaginary unit in \"" +
                             std::string(text) + "\"");
        }
        return Scalar(Rational(0), std::move(first)); // pure imaginary
    }
    char sign = c.peek();
    if (sign != '+' && sign != '-') {
        throw ParseError("unexpected character '" + std::string(1, sign) +
                         "' in scalar literal \"" + std::string(text) + "\"");
    }
    ++c.pos;
    if (!c.done() && c.peek() == '-') {
        throw ParseError("double sign in scalar literal \"" + std::string(text) + "\"");
    }
    Rational second = parse_rat(c);
    if (c.done() || c.peek() != 'i') {
        throw ParseError("expected 'i' after imaginary part in \"" + std::string(text) + "\"");
    }
    ++c.pos;
    if (!c.done()) {
        throw ParseError("trailing characters in scalar literal \"" + std::string(text) + "\"");
    }
    if (sign == '-') {
        second = -second;
    }
    return Scalar(std::move(first), std::move(second));
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else if (re_ == 0) {
        os << im_ << 'i';
    } else {
        os << re_;
        if (im_ > 0) {
            os << '+' << im_ << 'i';
        } else {
            os << '-' << Rational(-im_) << 'i';
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace jchain
