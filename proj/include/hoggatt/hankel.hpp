#ifndef HOGGATT_HANKEL_HPP
#define HOGGATT_HANKEL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hoggatt/exact.hpp"
#include "hoggatt/report.hpp"

namespace hoggatt {

/// d_k(s, m, r) = det(<k+i+j over m>_s)_{i,j<r}; s = 1 uses plain binomials.
struct HankelParams {
    long k = 0;
    long m = 0;
    long r = 1;
    long s = 1;

    void validate() const;
};

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t size() const { return n_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> data_;
};

struct HankelMatrix {
    IntegerMatrix entries;
    HankelParams provenance;

    // entries(i, j) depends on i + j only.
    bool has_hankel_structure() const;
};

// Requires r >= 1.
HankelMatrix build_matrix(const HankelParams& p);

/// Exact determinant by Bareiss elimination: every division in the schedule
/// is exact, so entries stay integral throughout.
Integer determinant_fraction_free(const IntegerMatrix& m);

/// d_k(s, m, r).  For r = 0: when s = 1, 1 if k >= m and 0 otherwise; when
/// s >= 2 the value is the constant 1 (an extension the harness flags).
Integer hankel_determinant(const HankelParams& p);

// D = (-1)^{C(r,2)} d
Integer signed_hankel_determinant(const HankelParams& p);

// (-1)^{C(r,2)}
int hankel_sign(long r);

std::vector<Integer> hankel_sequence(long s, long m, long r, long k_lo, long k_hi);

/// Desnanot-Jacobi condensation
///   d_k(r) d_{k+2}(r-2) - d_{k+2}(r-1) d_k(r-1) + d_{k+1}(r-1)^2 = 0
/// plus its normalized form whenever D_{k+1}(m, r-1) != 0.
VerificationReport check_condensation(long k, long m, long r, long s);

/// The two quotients of signed determinants that drive the inductive proof of
/// the column identity, each available through up to three routes.
struct ProofRatios {
    // (r-1)(m-r+2) / ((k+1)(k+2r-m-2))
    std::optional<Rational> closed_first;
    // (k-m+r-1)(k+r) / ((k-m+2r-2)(k+1))
    std::optional<Rational> closed_second;
    // D_k(m,r) D_{k+2}(m,r-2) / D_{k+1}(m,r-1)^2 from determinants
    std::optional<Rational> det_first;
    // D_{k+2}(m,r-1) D_k(m,r-1) / D_{k+1}(m,r-1)^2 from determinants
    std::optional<Rational> det_second;
    // Same quotients from the S_j rising-factorial products.
    std::optional<Rational> product_first;
    std::optional<Rational> product_second;
    // S_{r-1} / S_{r-2}
    std::optional<Rational> s_ratio;

    bool pole_free() const { return closed_first && closed_second && det_first && det_second; }
};

// Requires r >= 2.
ProofRatios evaluate_proof_ratios(long k, long m, long r);
VerificationReport check_proof_ratios(long k, long m, long r);

/// S_j(m, r) at k: (k+r-m+j)^{(m-2j)} / (1+j)^{(m-2j)}.
Rational theorem_s_weight(long m, long r, long j, const Rational& k);

/// k -> d_k(s,m,r) is a polynomial of degree r(ms-r+1): interpolate on that
/// many plus one points starting at k = 0 and confirm `extra` further values.
VerificationReport check_polynomiality(long s, long m, long r, std::size_t extra = 5);

} // namespace hoggatt

#endif
