#include "hoggatt/narayana.hpp"

#include <string>

#include "hoggatt/hankel.hpp"
#include "hoggatt/hoggatt.hpp"

namespace hoggatt {

namespace {

std::size_t as_size(long v)
{
    return static_cast<std::size_t>(v);
}

} // namespace

Poly narayana_poly(long r, long s, std::size_t margin)
{
    if (r < 1 || s < 1) {
        raise(ErrorCode::InvalidArgument, "Narayana polynomial needs r >= 1 and s >= 1");
    }
    const long bound = (r - 1) * (s - 1);
    const long n = r * s + 1;
    const std::size_t order = as_size(bound + 1) + margin;
    std::vector<Rational> c;
    c.reserve(order);
    for (long k = 0; k < static_cast<long>(order); ++k) {
        c.emplace_back(hoggatt_binomial(k + s, s, r));
    }
    const auto scaled = scale_by_one_minus_x_power(TruncatedSeries(std::move(c)), as_size(n));
    Poly p = extract_polynomial(scaled, bound, margin);
    if (!p.all_integer()) {
        raise(ErrorCode::Internal, "non-integral Narayana coefficients " + p.to_string());
    }
    return p;
}

Integer catalan_r(long r, long n)
{
    if (r < 1 || n < 0) {
        raise(ErrorCode::InvalidArgument, "Catalan number needs r >= 1 and n >= 0");
    }
    Integer num = factorial(r * n);
    Integer den = 1;
    for (long j = 0; j < r; ++j) {
        num *= factorial(j);
        den *= factorial(n + j);
    }
    return Rational(num, den).to_integer();
}

APoly a_poly_via_theorem2(long m, long r, std::size_t margin)
{
    if (r < 1 || m < r - 1) {
        raise(ErrorCode::Domain, "A_{m,r} needs r >= 1 and m >= r-1");
    }
    const long shift = m - r + 1;
    const long bound = std::max((r - 1) * (m - r), 0L);
    const long n = r * (m - r + 1) + 1;
    const std::size_t order = as_size(shift + bound + 1) + margin;
    std::vector<Rational> c;
    c.reserve(order);
    for (long k = 0; k < static_cast<long>(order); ++k) {
        c.emplace_back(hankel_determinant({k, m, r, 1}));
    }
    const auto scaled = scale_by_one_minus_x_power(TruncatedSeries(std::move(c)), as_size(n));
    Poly p = extract_polynomial(scaled, shift + bound, margin).unshifted(as_size(shift));
    p *= Rational(static_cast<long>(hankel_sign(r)));
    return APoly{m, r, std::move(p)};
}

TruncatedSeries f_operator(long n, long a, long b, std::size_t order)
{
    if (n < 0 || a < 0 || b < 0) {
        raise(ErrorCode::InvalidArgument, "F_n(a,b,x) needs n, a, b >= 0");
    }
    if (static_cast<long>(order) < n * b + 1) {
        raise(ErrorCode::TruncationTooShort, "order " + std::to_string(order) + " does not survive " +
                                                 std::to_string(n * b) + " differentiations");
    }
    TruncatedSeries f = TruncatedSeries::geometric(order);
    for (long i = 0; i < n; ++i) {
        f = derivative(f, as_size(b)).shifted(as_size(a));
    }
    return f;
}

APoly a_poly_via_operator(long m, long r, std::size_t margin)
{
    if (r < 1 || m < r - 1) {
        raise(ErrorCode::Domain, "A_{m,r} needs r >= 1 and m >= r-1");
    }
    if (m == r - 1) {
        return APoly{m, r, Poly{1}};
    }
    const long steps = m - r + 1;
    const long n = r * (m - r + 1) + 1;
    const long bound = (r - 1) + (r - 1) * (m - r);
    // Every application of x^{r-1} D^r loses one net coefficient.
    const std::size_t order = as_size(bound + 1 + steps) + margin;
    const auto f = f_operator(steps, r - 1, r, order);
    const auto scaled = scale_by_one_minus_x_power(f, as_size(n));
    Poly p = extract_polynomial(scaled, bound, margin).unshifted(as_size(r - 1));
    Rational norm(1L);
    for (long j = 0; j < r; ++j) {
        norm *= Rational(factorial(m + j + 1 - r), factorial(j));
    }
    p *= Rational(1L) / norm;
    return APoly{m, r, std::move(p)};
}

namespace {

std::optional<Poly> printed_a_poly(long m, long r)
{
    if (r == 1) {
        return Poly{1};
    }
    if (r == 3) {
        switch (m) {
        case 2:
        case 3: return Poly{1};
        case 4: return Poly{1, 3, 1};
        case 5: return Poly{1, 10, 20, 10, 1};
        default: break;
        }
    }
    return std::nullopt;
}

} // namespace

VerificationReport check_theorem2(long m, long r, std::size_t margin)
{
    VerificationReport rep;
    rep.id = "theorem2";
    rep.params = {{"m", m}, {"r", r}};
    const Poly hankel_route = a_poly_via_theorem2(m, r, margin).poly;
    const Poly operator_route = a_poly_via_operator(m, r, margin).poly;
    const Poly narayana_route = m >= r ? narayana_poly(r, m - r + 1, margin) : Poly{1};
    rep.lhs = hankel_route.to_string();
    rep.rhs = narayana_route.to_string();
    if (hankel_route != narayana_route) {
        rep.fail_with("Hankel route differs from Narayana extraction", Status::Mismatch);
    }
    if (operator_route != narayana_route) {
        rep.fail_with("operator formula gives " + operator_route.to_string(), Status::Mismatch);
    }
    const long degree = std::max((r - 1) * (m - r), 0L);
    if (hankel_route.degree() != degree) {
        rep.fail_with("degree " + std::to_string(hankel_route.degree()) + " differs from (r-1)(m-r)");
    }
    if (!is_unimodal(hankel_route)) {
        rep.fail_with("A_{m,r} is not unimodal");
    }
    const auto gp = analyze_gamma(hankel_route, hankel_route.degree());
    if (!gp.palindromic) {
        rep.fail_with("A_{m,r} is not palindromic");
    } else if (!gp.positive) {
        rep.fail_with("A_{m,r} is not gamma-positive");
    }
    if (const auto printed = printed_a_poly(m, r)) {
        if (*printed == hankel_route) {
            rep.note("matches the printed value " + printed->to_string());
        } else {
            rep.fail_with("printed value " + printed->to_string() + " differs", Status::Mismatch);
        }
    }
    if (m == r - 1) {
        rep.note("m = r-1: A is 1 by convention on the operator route");
    }
    return rep;
}

std::optional<Poly> printed_narayana_row(long r, long s)
{
    if (r != 3) {
        return std::nullopt;
    }
    switch (s) {
    case 1: return Poly{1};
    case 2: return Poly{1, 3, 1};
    case 3: return Poly{1, 10, 20, 10, 1};
    case 4: return Poly{1, 22, 113, 119, 113, 22, 1};
    default: return std::nullopt;
    }
}

VerificationReport check_catalan_row(long r, long s, std::size_t margin)
{
    VerificationReport rep;
    rep.id = "catalan";
    rep.params = {{"s", s}, {"r", r}};
    const Poly p = narayana_poly(r, s, margin);
    const Rational sum = p.eval(Rational(1L));
    const Integer cat = catalan_r(r, s);
    rep.lhs = sum.to_string();
    rep.rhs = cat.get_str();
    if (sum != Rational(cat)) {
        rep.fail_with("row sum differs from C_{r,s}");
    }
    const long center = (r - 1) * (s - 1);
    const auto gp = analyze_gamma(p, center);
    if (!gp.palindromic) {
        rep.fail_with("row is not palindromic about (r-1)(s-1)/2");
    } else if (!gp.positive) {
        rep.fail_with("row is not gamma-positive");
    }
    if (const auto printed = printed_narayana_row(r, s)) {
        if (*printed == p) {
            rep.note("matches the printed row " + printed->to_string());
        } else {
            std::string diff;
            for (std::size_t i = 0; i < std::max(printed->size(), p.size()); ++i) {
                if (printed->coeff(i) != p.coeff(i)) {
                    diff += std::string(diff.empty() ? " " : "; ") + "x^" + std::to_string(i) +
                            ": printed " + printed->coeff(i).to_string() + ", computed " +
                            p.coeff(i).to_string();
                }
            }
            rep.note("discrepancy with the printed row " + printed->to_string() + " (sums to " +
                     printed->eval(Rational(1L)).to_string() + ", C_{r,s} = " + cat.get_str() + "):" +
                     diff);
        }
    }
    rep.note("N(r,s,.) = " + p.to_string());
    return rep;
}

} // namespace hoggatt
