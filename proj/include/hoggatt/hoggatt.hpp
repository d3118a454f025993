#ifndef HOGGATT_HOGGATT_HPP
#define HOGGATT_HOGGATT_HPP

#include <vector>

#include "hoggatt/exact.hpp"
#include "hoggatt/poly.hpp"

namespace hoggatt {

/// Parameters of the r-Hoggatt binomial <n over k>_r.  k may lie outside
/// [0, n]; the binomial is then zero.
struct HoggattParams {
    long n = 0;
    long k = 0;
    long r = 1;

    // Throws InvalidArgument unless n >= 0 and r >= 1.
    void validate() const;
};

struct LFactor {
    long j = 0;
    Rational value;
};

// <n>_r = C(n + r - 1, r) for n >= 1.
Integer hoggatt_basic(long n, long r);

/// <n over k>_r through the integer-friendly quotient
/// prod_{j<r} C(n+j, k) / C(k+j, k); the result is asserted integral.
Integer hoggatt_binomial(const HoggattParams& p);
inline Integer hoggatt_binomial(long n, long k, long r)
{
    return hoggatt_binomial(HoggattParams{n, k, r});
}

/// L_j = (n+1-k+j)^{(k+r-1-2j)} / (1+j)^{(k+r-1-2j)} for j = 0..r-1.
/// Exponents may be negative.  Requires 0 <= k <= n.
std::vector<LFactor> l_factorization(const HoggattParams& p);

/// Terminating rF_{r-1}(-n, ..., -n-r+1; 2, ..., r; (-1)^r t), which is the
/// row generating function sum_k <n over k>_r t^k.
Rational row_genfun_hypergeometric(long n, long r, const Rational& t);

/// Counts semistandard fillings of a k-row, r-column rectangle with entries
/// in 1..n (rows weakly increasing, columns strictly increasing) by
/// backtracking.  Throws TooLarge when k * r > 16.
Integer ssyt_count_bruteforce(long n, long k, long r);

// Rows n = 0..rows-1 of the r-Hoggatt triangle, row n holding k = 0..n.
std::vector<std::vector<Integer>> triangle(long r, long rows);

// sum_k <n over k>_r x^k
Poly row_polynomial(long n, long r);

} // namespace hoggatt

#endif
