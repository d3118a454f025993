#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "hoggatt/narayana.hpp"
#include "../support/oracles.hpp"

using namespace hoggatt;

namespace {

// Classical Narayana polynomial sum_{k<n} (1/n) C(n,k) C(n,k+1) x^k.
Poly classical_narayana(long n)
{
    std::vector<Rational> c;
    for (long k = 0; k < n; ++k) {
        const mpz_class v = oracle::pascal(n, k) * oracle::pascal(n, k + 1) / n;
        c.emplace_back(Integer(v));
    }
    return Poly(std::move(c));
}

// x^a D^b applied n times to sum_{i<order} x^i, one monomial at a time.
std::map<long, mpz_class> termwise_f(long n, long a, long b, long order)
{
    std::map<long, mpz_class> terms;
    for (long i = 0; i < order; ++i) {
        terms[i] = 1;
    }
    for (long step = 0; step < n; ++step) {
        std::map<long, mpz_class> next;
        for (const auto& [e, c] : terms) {
            if (e < b) {
                continue;
            }
            mpz_class falling = 1;
            for (long t = 0; t < b; ++t) {
                falling *= e - t;
            }
            next[e - b + a] += c * falling;
        }
        terms = std::move(next);
    }
    return terms;
}

} // namespace

TEST_CASE("narayana_poly examples")
{
    CHECK(narayana_poly(3, 2) == Poly{1, 3, 1});
    CHECK(narayana_poly(3, 3) == Poly{1, 10, 20, 10, 1});
    for (long s = 1; s <= 6; ++s) {
        CHECK(narayana_poly(1, s) == Poly{1});
    }
    CHECK(narayana_poly(2, 3) == Poly{1, 3, 1});
    CHECK(narayana_poly(3, 4) == Poly{1, 22, 113, 190, 113, 22, 1});
    CHECK_THROWS_AS(narayana_poly(0, 2), Error);
    CHECK_THROWS_AS(narayana_poly(2, 0), Error);
}

TEST_CASE("dimension 2 rows are classical Narayana polynomials")
{
    for (long s = 1; s <= 8; ++s) {
        REQUIRE(narayana_poly(2, s) == classical_narayana(s));
    }
}

TEST_CASE("catalan_r")
{
    CHECK(catalan_r(2, 3) == 5);
    CHECK(catalan_r(3, 3) == 42);
    CHECK(catalan_r(3, 4) == 462);
    for (long n = 0; n <= 6; ++n) {
        CHECK(catalan_r(1, n) == 1);
    }
    CHECK(catalan_r(3, 0) == 1);
    for (long r = 1; r <= 5; ++r) {
        for (long n = 0; n <= 8; ++n) {
            REQUIRE(catalan_r(r, n) == oracle::catalan(r, n));
        }
    }
}

TEST_CASE("rows sum to Catalan numbers and are gamma-positive")
{
    for (long r = 1; r <= 4; ++r) {
        for (long s = 1; s <= 7; ++s) {
            const Poly p = narayana_poly(r, s);
            REQUIRE(p.eval(Rational(1L)) == Rational(catalan_r(r, s)));
            const long center = (r - 1) * (s - 1);
            REQUIRE(p.degree() == center);
            REQUIRE(is_palindromic(p, center));
            REQUIRE(analyze_gamma(p, center).positive);
            REQUIRE(p.all_integer());
        }
    }
}

TEST_CASE("known Narayana rows")
{
    REQUIRE(printed_narayana_row(3, 2));
    CHECK(*printed_narayana_row(3, 2) == Poly{1, 3, 1});
    REQUIRE(printed_narayana_row(3, 4));
    CHECK(printed_narayana_row(3, 4)->eval(Rational(1L)) == Rational(391L));
    CHECK_FALSE(printed_narayana_row(4, 2));
}

TEST_CASE("catalan row report flags the listed middle coefficient")
{
    const auto rep = check_catalan_row(3, 4);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.lhs == "462");
    CHECK(rep.rhs == "462");
    bool flagged = false;
    for (const auto& n : rep.notes) {
        flagged = flagged || (n.find("printed 119, computed 190") != std::string::npos &&
                              n.find("391") != std::string::npos);
    }
    CHECK(flagged);
    const auto clean = check_catalan_row(3, 3);
    for (const auto& n : clean.notes) {
        CHECK(n.find("discrepancy") == std::string::npos);
    }
}

TEST_CASE("A polynomials from the determinant generating function")
{
    CHECK(a_poly_via_theorem2(4, 3).poly == Poly{1, 3, 1});
    CHECK(a_poly_via_theorem2(5, 3).poly == Poly{1, 10, 20, 10, 1});
    for (long m = 0; m <= 6; ++m) {
        CHECK(a_poly_via_theorem2(m, 1).poly == Poly{1});
    }
    for (long m = 2; m <= 8; ++m) {
        CHECK(a_poly_via_theorem2(m, 2).poly == classical_narayana(m - 1));
    }
    CHECK(a_poly_via_theorem2(2, 3).poly == Poly{1});
    CHECK_THROWS_AS(a_poly_via_theorem2(1, 3), Error);
}

TEST_CASE("f_operator")
{
    CHECK(f_operator(0, 3, 2, 8) == TruncatedSeries::geometric(8));
    const auto one = f_operator(1, 0, 1, 10);
    for (std::size_t i = 0; i < one.order(); ++i) {
        CHECK(one.coeff(i) == Rational(static_cast<long>(i) + 1));
    }
    const auto f = f_operator(2, 2, 3, 20);
    const auto oracle_terms = termwise_f(2, 2, 3, 20);
    REQUIRE(f.order() == 18);
    for (std::size_t i = 0; i < f.order(); ++i) {
        const auto it = oracle_terms.find(static_cast<long>(i));
        const mpz_class expected = it == oracle_terms.end() ? mpz_class(0) : it->second;
        REQUIRE(f.coeff(i) == Rational(Integer(expected)));
    }
    try {
        f_operator(3, 1, 4, 10);
        FAIL("short order accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TruncationTooShort);
    }
}

TEST_CASE("A polynomials from the operator formula")
{
    CHECK(a_poly_via_operator(4, 3).poly == Poly{1, 3, 1});
    CHECK(a_poly_via_operator(2, 3).poly == Poly{1});
    CHECK(a_poly_via_operator(4, 2).poly == narayana_poly(2, 3));
}

TEST_CASE("three routes agree")
{
    for (long r = 1; r <= 4; ++r) {
        for (long m = r; m <= 10; ++m) {
            const Poly n = narayana_poly(r, m - r + 1);
            REQUIRE(a_poly_via_theorem2(m, r).poly == n);
            REQUIRE(a_poly_via_operator(m, r).poly == n);
        }
    }
}

TEST_CASE("Narayana row report from determinants")
{
    const auto rep = check_theorem2(4, 3);
    CHECK(rep.id == "theorem2");
    CHECK(rep.status == Status::Pass);
    CHECK(check_theorem2(5, 3).status == Status::Pass);
    CHECK(check_theorem2(3, 3).status == Status::Pass);
}
