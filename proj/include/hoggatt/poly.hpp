#ifndef HOGGATT_POLY_HPP
#define HOGGATT_POLY_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hoggatt/exact.hpp"

namespace hoggatt {

/// Dense univariate polynomial over Rational.  Coefficient i belongs to x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree kZeroDegree.
class Poly {
public:
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t power);
    // (1 + x)^n
    static Poly one_plus_x_power(std::size_t n);

    long degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    // Zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    Rational leading() const;

    /// Multiplies by x^power.
    Poly shifted(std::size_t power) const;
    /// Divides by x^power; throws Domain if a low coefficient is nonzero.
    Poly unshifted(std::size_t power) const;

    bool all_integer() const;

    // "1 + 3x + x^2"; "0" for the zero polynomial.
    std::string to_string() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Power series known modulo x^order: indices 0..order-1 are defined, every
/// higher coefficient is undefined and reading it throws.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {}

    // 1/(1-x) mod x^order
    static TruncatedSeries geometric(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Multiplies by x^power; the order grows by the same amount.
    TruncatedSeries shifted(std::size_t power) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

Poly scale_by_one_minus_x_power(const Poly& p, std::size_t n);
TruncatedSeries scale_by_one_minus_x_power(const TruncatedSeries& f, std::size_t n);
TruncatedSeries divide_by_one_minus_x_power(const TruncatedSeries& f, std::size_t n);

// b-fold formal derivative; the order drops by b.
TruncatedSeries derivative(const TruncatedSeries& f, std::size_t b);

/// Reads a series as a polynomial of degree at most `degree_bound`.  At least
/// `margin` coefficients past the bound must be known, and all of them must
/// vanish.
///
/// Throws TruncationTooShort when order < degree_bound + 1 + margin and
/// DegreeOverflow when a coefficient past the bound is nonzero.
Poly extract_polynomial(const TruncatedSeries& f, long degree_bound, std::size_t margin);

/// Unique polynomial of degree < points.size() through all points.  Throws
/// DuplicateAbscissa for repeated x values and InvalidArgument for no points.
Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Splits p = scalar * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient.  The zero polynomial
/// gives (0, 0).
std::pair<Poly, Rational> primitive_form(const Poly& p);

bool is_palindromic(const Poly& p, long n);
bool is_unimodal(const Poly& p);

struct GammaVector {
    std::vector<Rational> gammas; // gamma_0 .. gamma_{floor(n/2)}
    long center = 0;              // n

    /// sum_j gamma_j x^j (1 + x)^{n - 2j}
    Poly reconstruct() const;
    /// gamma_j > 0 for every j up to the last nonzero entry.
    bool positive() const;
    bool nonnegative() const;
};

GammaVector gamma_decompose(const Poly& p, long n);

struct GammaPositivity {
    bool palindromic = false;
    GammaVector gamma;
    bool positive = false;
};

// Never throws for a non-palindromic input; it reports it instead.
GammaPositivity analyze_gamma(const Poly& p, long n);

} // namespace hoggatt

#endif
