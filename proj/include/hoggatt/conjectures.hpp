#ifndef HOGGATT_CONJECTURES_HPP
#define HOGGATT_CONJECTURES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hoggatt/exact.hpp"
#include "hoggatt/narayana.hpp"
#include "hoggatt/poly.hpp"
#include "hoggatt/report.hpp"

namespace hoggatt {

/// (-1)^{C(r,2)} d_k(m,r) = <k over m-r+1>_r with the two sides computed by
/// the Hankel and Hoggatt code paths.  Requires m >= r-1.
VerificationReport check_theorem1(long k, long m, long r);

/// S_j(s,m,r) at k: (k+r-m+j)^{(m+s-1-2j)} / (1+j)^{(m+s-1-2j)}.
/// Throws PoleEncountered when a negative-exponent factor vanishes.
Rational s_weight(long s, long m, long r, long j, const Rational& k);

/// Staircase product
///   (S_0 ... S_{r-s})^s (S_{r-s+1} S_{r-s+2})^{s-1} ... (S_{r+s-3} S_{r+s-2})^1.
/// Throws Domain for s > r and PoleEncountered on a pole.
Rational w_weight(long s, long m, long r, const Rational& k);

/// Everything the generating-function conjecture claims about one (s,m,r).
struct Conjecture3Outcome {
    long s = 0;
    long m = 0;
    long r = 0;
    Poly a_poly;
    long claimed_degree = 0;     // (rs-1)m - s - r^2 + r + 1
    bool shift_ok = false;       // x^{m-r+1} divides the numerator
    bool degree_ok = false;
    bool positive_integer = false;
    GammaPositivity gamma;
    Rational a_at_one;
    // C_{m,s}^r C_{r,ms-r+1} with C_{m,s} read dimension-first (C_{m,s}) or
    // index-first (C_{s,m}); nullopt when that reading is undefined.
    std::optional<Integer> predicted_dimension_first;
    std::optional<Integer> predicted_index_first;

    bool catalan_value_dimension_first() const
    {
        return predicted_dimension_first && a_at_one == Rational(*predicted_dimension_first);
    }
    bool catalan_value_index_first() const
    {
        return predicted_index_first && a_at_one == Rational(*predicted_index_first);
    }
};

// Requires s, r >= 1 and m >= r-1.
Conjecture3Outcome analyze_conjecture3(long s, long m, long r, std::size_t margin = kDefaultMargin);
VerificationReport to_report(const Conjecture3Outcome& o);
VerificationReport check_conjecture3(long s, long m, long r, std::size_t margin = kDefaultMargin);

/// The value-at-one identity must hold under one reading of C_{m,s} on every
/// point; summarises which reading does.
VerificationReport check_catalan_value_reading(const std::vector<Conjecture3Outcome>& outcomes);

enum class CorrectionRole { LowerU, UpperU };

struct InterpolationProtocol {
    std::size_t holdout = 5;
    // Extra fit points beyond the claimed degree, so a larger true degree is
    // still recovered exactly.
    std::size_t slack = 4;
    // Samples tried before giving up on pole-free abscissas.
    std::size_t max_attempts = 200;
};

struct RecoveredPoly {
    CorrectionRole role = CorrectionRole::LowerU;
    long s = 0;
    long m = 0;
    long r = 0;
    Poly poly;     // primitive integer form
    Rational scalar; // raw interpolant = scalar * poly
    long claimed_degree = 0;
    long recovered_degree = 0;
    bool consistent = false;
    std::size_t fit_points = 0;
    std::size_t holdout_points = 0;
    std::size_t skipped_samples = 0;
    long first_sample = 0;
};

/// Interpolates v(k) = (-1)^{C(r,2)} d_k(s,m,r) / w_k(s,m,r) from
/// k = m+r+s upward.  Requires s <= r and m >= r-1.
RecoveredPoly recover_u(long s, long m, long r, const InterpolationProtocol& proto = {});

/// Interpolates (-1)^{C(s,2)} d_k(r,m,s) / w_k(s, m+r-s, r); here r is the
/// Hoggatt dimension and s the matrix size.  Requires s <= r and m >= s-1.
RecoveredPoly recover_U(long r, long m, long s, const InterpolationProtocol& proto = {});

VerificationReport check_conjecture4_u(long s, long m, long r, const InterpolationProtocol& proto = {});
VerificationReport check_conjecture4_U(long r, long m, long s, const InterpolationProtocol& proto = {});

// (s-1)r^2 - (s^2-1)r + 2 C(s+1,3)
long claimed_u_degree(long s, long r);
// 2 C(s,3)
long claimed_U_degree(long s);

/// The size-2 Hankel determinants of an r-Hoggatt column,
///   d_k(r,m,2) = -(prod_{j<r-1} (k+2-m+j)^{(m+r-1-2j)} / (1+j)^{(m+r-1-2j)})^2
///                 * <k over m-r>_2 / <m-1 over r-1>_2,
/// against direct determinants.  Requires r >= 2 and m >= r.
VerificationReport check_s2_closed_form(long r, long m, long k);

struct S2ClosedForm {
    Integer determinant;
    // Product form with rising factorials; nullopt on a pole.
    std::optional<Rational> product_form;
    // -<k+2 over m+1>_{r-1}^2 <k over m-r>_2 / <m-1 over m-r>_2
    Rational hoggatt_form;
    // <k+2 over m+1>_{r-1} <k over m-r>_2 / <m-1 over m-r>_2, the unsquared
    // and unsigned right-hand variant.
    Rational unsquared_form;
};

S2ClosedForm evaluate_s2_closed_form(long r, long m, long k);

} // namespace hoggatt

#endif
