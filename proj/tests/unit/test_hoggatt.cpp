#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hoggatt/hoggatt.hpp"
#include "hoggatt/poly.hpp"
#include "../support/oracles.hpp"

using namespace hoggatt;

namespace {

Rational product(const std::vector<LFactor>& fs)
{
    Rational acc(1L);
    for (const auto& f : fs) {
        acc *= f.value;
    }
    return acc;
}

std::vector<long> row_as_longs(const std::vector<Integer>& row)
{
    std::vector<long> out;
    for (const auto& v : row) {
        out.push_back(v.get_si());
    }
    return out;
}

} // namespace

TEST_CASE("hoggatt_basic")
{
    CHECK(hoggatt_basic(1, 3) == 1);
    CHECK(hoggatt_basic(2, 2) == 3);
    CHECK(hoggatt_basic(4, 2) == 10);
    CHECK_THROWS_AS(hoggatt_basic(0, 2), Error);
    try {
        hoggatt_basic(0, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
}

TEST_CASE("hoggatt_basic agrees with the rising-factorial ratio")
{
    // (r+1)^{(n-1)} / (1)^{(n-1)} for n, r <= 8
    for (long n = 1; n <= 8; ++n) {
        for (long r = 1; r <= 8; ++r) {
            const Rational ratio = rising_factorial(Rational(r + 1), n - 1) / rising_factorial(Rational(1L), n - 1);
            REQUIRE(ratio == Rational(hoggatt_basic(n, r)));
            REQUIRE(hoggatt_basic(n, r) == oracle::pascal(n + r - 1, r));
        }
    }
}

TEST_CASE("hoggatt_binomial examples")
{
    CHECK(hoggatt_binomial(4, 2, 3) == 50);
    CHECK(hoggatt_binomial(7, 3, 3) == 4116);
    CHECK(hoggatt_binomial(5, 7, 3) == 0);
    CHECK(hoggatt_binomial(6, 2, 3) == 490);
    CHECK(hoggatt_binomial(6, -1, 3) == 0);
    CHECK(hoggatt_binomial(0, 0, 4) == 1);
    CHECK_THROWS_AS(hoggatt_binomial(3, 1, 0), Error);
    CHECK_THROWS_AS(hoggatt_binomial(-1, 0, 2), Error);
}

TEST_CASE("hoggatt_binomial matches the hook-content formula")
{
    for (long r = 1; r <= 6; ++r) {
        for (long n = 0; n <= 20; ++n) {
            for (long k = -1; k <= n + 1; ++k) {
                REQUIRE(hoggatt_binomial(n, k, r) == oracle::hook_content(n, k, r));
            }
        }
    }
}

TEST_CASE("dimension 2 matches the Narayana-style product")
{
    // (1/(k+1)) C(n,k) C(n+1,k)
    for (long n = 0; n <= 15; ++n) {
        for (long k = 0; k <= n; ++k) {
            const mpz_class v = oracle::pascal(n, k) * oracle::pascal(n + 1, k) / (k + 1);
            REQUIRE(hoggatt_binomial(n, k, 2) == v);
        }
    }
}

TEST_CASE("l_factorization examples")
{
    CHECK(product(l_factorization({5, 1, 3})) == Rational(35L));
    const auto single = l_factorization({3, 3, 1});
    REQUIRE(single.size() == 1);
    CHECK(single[0].value == Rational(1L));
    CHECK(product(l_factorization({4, 2, 2})) == Rational(20L));
    CHECK_THROWS_AS((l_factorization({3, 4, 2})), Error);
    CHECK_THROWS_AS((l_factorization({3, -1, 2})), Error);
}

TEST_CASE("row generating function examples")
{
    CHECK(row_genfun_hypergeometric(2, 3, Rational(1L)) == Rational(6L));
    CHECK(row_genfun_hypergeometric(0, 5, Rational(Integer(-7), Integer(3))) == Rational(1L));
    CHECK(row_genfun_hypergeometric(3, 3, Rational(2L)) == Rational(69L));
}

TEST_CASE("ssyt brute force")
{
    CHECK(ssyt_count_bruteforce(2, 1, 2) == 3);
    CHECK(ssyt_count_bruteforce(1, 1, 5) == 1);
    CHECK(ssyt_count_bruteforce(4, 2, 3) == 50);
    CHECK(ssyt_count_bruteforce(2, 3, 2) == 0);
    try {
        ssyt_count_bruteforce(5, 3, 6);
        FAIL("guard not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    // Convention check: one row of two columns counts multisets of size 2.
    for (long n = 1; n <= 8; ++n) {
        CHECK(ssyt_count_bruteforce(n, 1, 2) == oracle::pascal(n + 1, 2));
    }
}

TEST_CASE("all routes agree for n <= 10, r <= 4")
{
    for (long r = 1; r <= 4; ++r) {
        for (long n = 0; n <= 10; ++n) {
            Integer row_sum = 0;
            for (long k = 0; k <= n; ++k) {
                const Integer h = hoggatt_binomial(n, k, r);
                row_sum += h;
                REQUIRE(product(l_factorization({n, k, r})) == Rational(h));
                if (n >= 1 && k >= 1 && k * r <= 16 && n <= 8) {
                    REQUIRE(ssyt_count_bruteforce(n, k, r) == h);
                }
            }
            REQUIRE(row_genfun_hypergeometric(n, r, Rational(1L)) == Rational(row_sum));
        }
    }
}

TEST_CASE("row generating function at other arguments")
{
    for (long r = 1; r <= 4; ++r) {
        for (long n = 0; n <= 8; ++n) {
            const Rational t(Integer(-3), Integer(5));
            REQUIRE(row_genfun_hypergeometric(n, r, t) == row_polynomial(n, r).eval(t));
        }
    }
}

TEST_CASE("triangle examples")
{
    const auto t3 = triangle(3, 5);
    REQUIRE(t3.size() == 5);
    CHECK(row_as_longs(t3[4]) == std::vector<long>{1, 20, 50, 20, 1});
    const auto t1 = triangle(1, 4);
    CHECK(row_as_longs(t1[3]) == std::vector<long>{1, 3, 3, 1});
    const auto t2 = triangle(2, 4);
    CHECK(row_as_longs(t2[3]) == std::vector<long>{1, 6, 6, 1});
    const auto t2b = triangle(2, 6);
    CHECK(row_as_longs(t2b[5]) == std::vector<long>{1, 15, 50, 50, 15, 1});
    CHECK(triangle(3, 0).empty());
}

TEST_CASE("rows are symmetric and unimodal")
{
    for (long r = 1; r <= 5; ++r) {
        for (long n = 0; n <= 20; ++n) {
            for (long k = 0; k <= n; ++k) {
                REQUIRE(hoggatt_binomial(n, k, r) == hoggatt_binomial(n, n - k, r));
            }
            REQUIRE(is_unimodal(row_polynomial(n, r)));
        }
    }
}

TEST_CASE("row polynomials are gamma-nonnegative")
{
    for (long r = 1; r <= 4; ++r) {
        for (long n = 0; n <= 14; ++n) {
            const auto g = gamma_decompose(row_polynomial(n, r), n);
            REQUIRE(g.nonnegative());
            REQUIRE(g.gammas.front() == Rational(1L));
            REQUIRE(g.reconstruct() == row_polynomial(n, r));
        }
    }
}

TEST_CASE("columns are polynomials in n of degree k*r")
{
    for (long r = 1; r <= 3; ++r) {
        for (long k = 0; k <= 4; ++k) {
            const long d = k * r;
            std::vector<std::pair<Rational, Rational>> pts;
            for (long n = 0; n <= d; ++n) {
                pts.emplace_back(Rational(n + k), Rational(hoggatt_binomial(n + k, k, r)));
            }
            const Poly p = lagrange_interpolate(pts);
            REQUIRE(p.degree() == d);
            for (long n = d + 1; n <= d + 5; ++n) {
                REQUIRE(p.eval(Rational(n + k)) == Rational(hoggatt_binomial(n + k, k, r)));
            }
        }
    }
}
