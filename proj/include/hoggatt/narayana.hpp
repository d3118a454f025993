#ifndef HOGGATT_NARAYANA_HPP
#define HOGGATT_NARAYANA_HPP

#include <cstddef>
#include <optional>

#include "hoggatt/exact.hpp"
#include "hoggatt/poly.hpp"
#include "hoggatt/report.hpp"

namespace hoggatt {

inline constexpr std::size_t kDefaultMargin = 5;

/// sum_j N(r, s, j) x^j, extracted as (1-x)^{rs+1} sum_k <k+s over s>_r x^k.
/// The result must have degree <= (r-1)(s-1) and integer coefficients;
/// DegreeOverflow is raised otherwise.
Poly narayana_poly(long r, long s, std::size_t margin = kDefaultMargin);

/// C_{r,n} = (rn)! prod_{j<r} j! / (n+j)!
Integer catalan_r(long r, long n);

struct APoly {
    long m = 0;
    long r = 0;
    Poly poly;
};

/// Reads A_{m,r} off the Hankel generating function:
/// (1-x)^{r(m-r+1)+1} sum_k d_k(m,r) x^k = (-1)^{C(r,2)} x^{m-r+1} A_{m,r}(x).
/// Requires m >= r-1.
APoly a_poly_via_theorem2(long m, long r, std::size_t margin = kDefaultMargin);

/// F_n(a, b, x) = (x^a D^b)^n 1/(1-x), starting from the geometric series
/// known to `order` coefficients.  Each application costs b coefficients of
/// precision and gains a.
TruncatedSeries f_operator(long n, long a, long b, std::size_t order);

/// A_{m,r}(x) = (1-x)^{r(m-r+1)+1} F_{m-r+1}(r-1, r, x)
///              / (x^{r-1} prod_{j<r} (m+j+1-r)!/j!)      for m >= r,
/// and 1 for m = r-1.
APoly a_poly_via_operator(long m, long r, std::size_t margin = kDefaultMargin);

// The three A_{m,r} routes, plus palindromicity, unimodality and
// gamma-positivity of the result.
VerificationReport check_theorem2(long m, long r, std::size_t margin = kDefaultMargin);

// Row sum against C_{r,s}; palindromic and gamma-positive; and a comparison
// with the printed dimension-3 rows wherever one exists.
VerificationReport check_catalan_row(long r, long s, std::size_t margin = kDefaultMargin);

/// Dimension-3 Narayana rows as they appear in the literature this harness
/// checks against, for s = 1..4.  nullopt elsewhere.
std::optional<Poly> printed_narayana_row(long r, long s);

} // namespace hoggatt

#endif
