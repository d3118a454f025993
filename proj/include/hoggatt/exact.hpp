#ifndef HOGGATT_EXACT_HPP
#define HOGGATT_EXACT_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hoggatt/error.hpp"

namespace hoggatt {

using Integer = mpz_class;

// Exact fraction, always in canonical form: positive denominator and
// gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "p", "-p" or "p/q" with optional surrounding blanks.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Throws Domain if the value is not integral.
    Integer to_integer() const;
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);

/// x^{(r)}: x(x+1)...(x+r-1) for r > 0, 1 for r = 0, and
/// 1/((x-1)(x-2)...(x+r)) for r < 0.  Throws ZeroDenominator when a
/// negative-exponent factor vanishes.
Rational rising_factorial(const Rational& x, long r);

// C(n, k) for n >= 0; zero outside 0 <= k <= n.  Throws NegativeN for n < 0.
Integer binomial(long n, long k);

Integer factorial(long n);

} // namespace hoggatt

#endif
