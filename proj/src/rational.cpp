#include "degseq/rational.hpp"

#include <stdexcept>

namespace degseq {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

UInt magnitude(Int v) { return v < 0 ? UInt(0) - UInt(v) : UInt(v); }

UInt gcd_u(UInt a, UInt b) {
    while (b != 0) {
        UInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int gcd_i(Int a, Int b) { return Int(gcd_u(magnitude(a), magnitude(b))); }

}  // namespace

Rational Rational::make(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = gcd_i(num, den);
    Rational r;
    if (g > 1) {
        num /= g;
        den /= g;
    }
    r.num_ = num;
    r.den_ = den;
    return r;
}

Rational::Rational(long long num, long long den) { *this = make(num, den); }

Rational::Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational::Int Rational::ceil() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::frac() const {
    Rational f;
    Int r = num_ % den_;
    if (r < 0) r += den_;
    return make(r, den_);
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

int Rational::cmp(const Rational& other) const {
    int sa = sign();
    int sb = other.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Int a = num_ < 0 ? -num_ : num_;
    Int c = other.num_ < 0 ? -other.num_ : other.num_;
    Int b = den_;
    Int d = other.den_;
    // Compare a/b vs c/d with everything positive, then flip for negatives.
    int result = 0;
    for (;;) {
        Int q1 = a / b;
        Int q2 = c / d;
        if (q1 != q2) {
            result = q1 < q2 ? -1 : 1;
            break;
        }
        Int r1 = a % b;
        Int r2 = c % d;
        if (r1 == 0 && r2 == 0) {
            result = 0;
            break;
        }
        if (r1 == 0) {
            result = -1;
            break;
        }
        if (r2 == 0) {
            result = 1;
            break;
        }
        // r1/b vs r2/d is decided by d/r2 vs b/r1.
        Int na = d, nb = r2, nc = b, nd = r1;
        a = na;
        b = nb;
        c = nc;
        d = nd;
    }
    return sa < 0 ? -result : result;
}

Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd_i(a.den_, b.den_);
    Int db = b.den_ / g;
    Int num = a.num_ * db + b.num_ * (a.den_ / g);
    return Rational::make(num, a.den_ * db);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce before multiplying to keep intermediates small.
    Int g1 = gcd_i(a.num_, b.den_);
    Int g2 = gcd_i(b.num_, a.den_);
    Int num = (a.num_ / g1) * (b.num_ / g2);
    Int den = (a.den_ / g2) * (b.den_ / g1);
    return Rational::make(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    Int g1 = gcd_i(a.num_, b.num_);
    Int g2 = gcd_i(b.den_, a.den_);
    Int num = (a.num_ / g1) * (b.den_ / g2);
    Int den = (a.den_ / g2) * (b.num_ / g1);
    return Rational::make(num, den);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

std::string int128_str(Rational::Int value) {
    if (value == 0) return "0";
    bool neg = value < 0;
    UInt mag = magnitude(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(char('0' + int(mag % 10)));
        mag /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

}  // namespace degseq
