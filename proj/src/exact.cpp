#include "hoggatt/exact.hpp"

#include <cctype>
#include <ostream>

namespace hoggatt {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        raise(ErrorCode::ZeroDenominator, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        raise(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            raise(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
        }
    }
    // mpz_set_str rejects a leading '+'.
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

Integer Rational::to_integer() const
{
    if (!is_integer()) {
        raise(ErrorCode::Domain, "value " + to_string() + " is not an integer");
    }
    return value_.get_num();
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational Rational::operator-() const
{
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        raise(ErrorCode::ZeroDenominator, "division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

Rational pow(const Rational& base, unsigned long exponent)
{
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Rational rising_factorial(const Rational& x, long r)
{
    Rational acc(1L);
    if (r >= 0) {
        for (long i = 0; i < r; ++i) {
            acc *= x + Rational(i);
        }
        return acc;
    }
    for (long j = 1; j <= -r; ++j) {
        const Rational factor = x - Rational(j);
        if (factor.is_zero()) {
            raise(ErrorCode::ZeroDenominator,
                  "rising factorial (" + x.to_string() + ")^(" + std::to_string(r) +
                      ") has a vanishing factor x-" + std::to_string(j));
        }
        acc *= factor;
    }
    return Rational(1L) / acc;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        raise(ErrorCode::NegativeN, "binomial(" + std::to_string(n) + ", " +
                                        std::to_string(k) + ") has negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n)
{
    if (n < 0) {
        raise(ErrorCode::Domain, "factorial of negative " + std::to_string(n));
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace hoggatt
