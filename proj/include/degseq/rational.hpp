#pragma once

#include <string>

namespace degseq {

/// Exact fraction of 128-bit integers, always in lowest terms with a
/// positive denominator. Comparisons and arithmetic never round; ordering
/// uses a continued-fraction descent instead of cross-multiplication, so
/// it cannot overflow for any representable pair of values.
class Rational {
public:
    using Int = __int128;

    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit on purpose
    Rational(long long num, long long den);

    static Rational make(Int num, Int den);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Int floor() const;
    Int ceil() const;
    /// Fractional part x - floor(x), in [0, 1).
    Rational frac() const;
    Rational abs() const;

    /// Three-way exact comparison: -1, 0, or +1.
    int cmp(const Rational& other) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

    /// "p" when the value is integral, "p/q" otherwise.
    std::string str() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

/// Decimal rendering of a 128-bit integer.
std::string int128_str(Rational::Int value);

}  // namespace degseq
