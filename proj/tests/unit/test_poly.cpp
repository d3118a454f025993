#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hoggatt/hoggatt.hpp"
#include "hoggatt/poly.hpp"
#include "../support/oracles.hpp"

using namespace hoggatt;

namespace {

Rational q(long p, long d = 1)
{
    return Rational(Integer(p), Integer(d));
}

TruncatedSeries series_of(auto&& coeff, std::size_t order)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < order; ++i) {
        c.emplace_back(coeff(static_cast<long>(i)));
    }
    return TruncatedSeries(std::move(c));
}

Poly from_mpq(const std::vector<mpq_class>& c)
{
    std::vector<Rational> out;
    for (const auto& v : c) {
        out.emplace_back(Integer(v.get_num()), Integer(v.get_den()));
    }
    return Poly(std::move(out));
}

} // namespace

TEST_CASE("poly basics")
{
    const Poly p{1, 3, 1};
    CHECK(p.degree() == 2);
    CHECK(p.eval(q(1)) == q(5));
    CHECK(p.to_string() == "1 + 3x + x^2");
    CHECK(Poly{1, 1} * Poly{1, -1} == Poly{1, 0, -1});
    CHECK(Poly().eval(q(7)) == q(0));
    CHECK(Poly().degree() == Poly::kZeroDegree);
    CHECK(Poly{0, 0, 0}.is_zero());
    CHECK(Poly{1, 2, 0, 0}.size() == 2);
    CHECK((Poly{1, 2} - Poly{1, 2}).is_zero());
    CHECK(Poly{2, 0, 5}.coeff(7) == q(0));
    CHECK(Poly{0, 0, 3}.unshifted(2) == Poly{3});
    CHECK_THROWS_AS((Poly{1, 3}.unshifted(1)), Error);
    CHECK(Poly{1, 2}.shifted(2) == Poly{0, 0, 1, 2});
    CHECK(Poly::one_plus_x_power(3) == Poly{1, 3, 3, 1});
}

TEST_CASE("scaling series by (1-x)^N")
{
    const auto ones = TruncatedSeries::geometric(10);
    const auto once = scale_by_one_minus_x_power(ones, 1);
    CHECK(extract_polynomial(once, 0, 5) == Poly{1});

    const auto cols = series_of([](long k) { return Rational(binomial(k + 2, 2)); }, 12);
    CHECK(extract_polynomial(scale_by_one_minus_x_power(cols, 3), 0, 5) == Poly{1});

    const auto hog = series_of([](long k) { return Rational(hoggatt_binomial(k + 2, 2, 3)); }, 12);
    CHECK(extract_polynomial(scale_by_one_minus_x_power(hog, 7), 2, 5) == Poly{1, 3, 1});

    CHECK(scale_by_one_minus_x_power(Poly{1, 1}, 1) == Poly{1, 0, -1});
    CHECK(scale_by_one_minus_x_power(Poly{1, 2, 3}, 0) == Poly{1, 2, 3});
}

TEST_CASE("column generating functions telescope to 1")
{
    for (long k = 0; k <= 6; ++k) {
        const auto f = series_of([k](long n) { return Rational(oracle::pascal(n + k, k)); }, 20);
        REQUIRE(extract_polynomial(scale_by_one_minus_x_power(f, static_cast<std::size_t>(k + 1)), 0, 5) ==
                Poly{1});
    }
}

TEST_CASE("extract_polynomial guards")
{
    const auto ones = TruncatedSeries::geometric(6);
    // Not a polynomial: every coefficient is 1.
    CHECK_THROWS_AS(extract_polynomial(ones, 2, 2), Error);
    try {
        extract_polynomial(ones, 2, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeOverflow);
    }
    try {
        extract_polynomial(ones, 2, 5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TruncationTooShort);
    }
    CHECK_THROWS_AS(ones.coeff(6), Error);
}

TEST_CASE("series division undoes scaling up to truncation")
{
    oracle::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c;
        const std::size_t order = static_cast<std::size_t>(oracle::uniform(rng, 1, 25));
        for (std::size_t i = 0; i < order; ++i) {
            c.push_back(q(oracle::uniform(rng, -40, 40), oracle::uniform(rng, 1, 9)));
        }
        const TruncatedSeries f(c);
        const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 0, 8));
        REQUIRE(divide_by_one_minus_x_power(scale_by_one_minus_x_power(f, n), n) == f);
    }
}

TEST_CASE("derivative")
{
    const auto d1 = derivative(TruncatedSeries::geometric(5), 1);
    CHECK(d1.order() == 4);
    for (std::size_t i = 0; i < d1.order(); ++i) {
        CHECK(d1.coeff(i) == q(static_cast<long>(i) + 1));
    }
    const auto d2 = derivative(TruncatedSeries(std::vector<Rational>{q(0), q(0), q(0), q(1), q(0), q(0)}), 2);
    CHECK(d2.coeffs() == std::vector<Rational>{q(0), q(6), q(0), q(0)});
    const auto d3 = derivative(TruncatedSeries::geometric(9), 3);
    CHECK(d3.order() == 6);
    for (std::size_t i = 0; i < d3.order(); ++i) {
        const long n = static_cast<long>(i);
        CHECK(d3.coeff(i) == q((n + 1) * (n + 2) * (n + 3)));
    }
    CHECK(derivative(TruncatedSeries::geometric(2), 5).order() == 0);
}

TEST_CASE("lagrange interpolation examples")
{
    const std::vector<std::pair<Rational, Rational>> constant{{q(0), q(9, 4)}};
    CHECK(lagrange_interpolate(constant) == Poly(std::vector<Rational>{q(9, 4)}));

    const std::vector<std::pair<Rational, Rational>> square{{q(0), q(0)}, {q(1), q(1)}, {q(2), q(4)}};
    CHECK(lagrange_interpolate(square) == Poly{0, 0, 1});

    std::vector<std::pair<Rational, Rational>> cubic;
    for (long k = 0; k <= 3; ++k) {
        cubic.emplace_back(q(k), Rational(oracle::pascal(k, 3)));
    }
    const Poly c = lagrange_interpolate(cubic);
    CHECK(c == Poly(std::vector<Rational>{q(0), q(1, 3), q(-1, 2), q(1, 6)}));
    CHECK(c.eval(q(7)) == q(35));

    const std::vector<std::pair<Rational, Rational>> dup{{q(1), q(0)}, {q(1), q(2)}};
    try {
        lagrange_interpolate(dup);
        FAIL("duplicate abscissa accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateAbscissa);
    }
    CHECK_THROWS_AS((lagrange_interpolate({})), Error);
}

TEST_CASE("lagrange interpolation is exact on random polynomials")
{
    oracle::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const long d = oracle::uniform(rng, 0, 8);
        std::vector<Rational> c;
        for (long i = 0; i <= d; ++i) {
            c.push_back(q(oracle::uniform(rng, -30, 30), oracle::uniform(rng, 1, 7)));
        }
        const Poly p(c);
        std::vector<std::pair<Rational, Rational>> pts;
        for (long i = 0; i <= d; ++i) {
            // Abscissas i + a/7 with 0 <= a < 7 are distinct.
            const Rational x = q(7 * i + oracle::uniform(rng, 0, 6), 7);
            pts.emplace_back(x, p.eval(x));
        }
        const Poly back = lagrange_interpolate(pts);
        for (const auto& [x, y] : pts) {
            REQUIRE(back.eval(x) == y);
        }
        const Rational fresh = q(1000 + trial, 7);
        REQUIRE(back.eval(fresh) == p.eval(fresh));
        REQUIRE(back == p);
    }
}

TEST_CASE("primitive form")
{
    const auto [p, s] = primitive_form(Poly(std::vector<Rational>{q(-2, 3), q(0), q(-4, 9)}));
    CHECK(p == Poly{3, 0, 2});
    CHECK(s == q(-2, 9));
    CHECK(primitive_form(Poly()).first.is_zero());
}

TEST_CASE("palindromicity")
{
    CHECK(is_palindromic(Poly{1, 3, 1}, 2));
    CHECK_FALSE(is_palindromic(Poly{1, 2}, 1));
    CHECK(is_palindromic(Poly{1, 35, 175, 175, 35, 1}, 5));
    CHECK(is_palindromic(Poly{0, 1, 0}, 2));
    CHECK_FALSE(is_palindromic(Poly{1, 3, 1}, 1));
    CHECK(is_palindromic(Poly{0, 1, 1}, 3));
}

TEST_CASE("unimodality uses weak inequalities")
{
    CHECK(is_unimodal(Poly{1, 10, 20, 10, 1}));
    CHECK_FALSE(is_unimodal(Poly{1, 0, 1}));
    CHECK(is_unimodal(Poly{1, 1}));
    CHECK(is_unimodal(Poly{2, 2, 3, 3, 1, 1}));
    CHECK(is_unimodal(Poly()));
}

TEST_CASE("gamma decomposition examples")
{
    const auto g = gamma_decompose(Poly{1, 3, 1}, 2);
    CHECK(g.gammas == std::vector<Rational>{q(1), q(1)});
    CHECK(g.positive());

    const auto h = gamma_decompose(Poly::one_plus_x_power(4), 4);
    CHECK(h.gammas == std::vector<Rational>{q(1), q(0), q(0)});
    CHECK(h.positive());
    CHECK(h.nonnegative());

    const auto neg = gamma_decompose(Poly{1, 1, 1}, 2);
    CHECK(neg.gammas == std::vector<Rational>{q(1), q(-1)});
    CHECK_FALSE(neg.positive());

    try {
        gamma_decompose(Poly{1, 2}, 1);
        FAIL("non-palindromic accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPalindromic);
    }

    const auto a = analyze_gamma(Poly{1, 2}, 1);
    CHECK_FALSE(a.palindromic);
    CHECK_FALSE(a.positive);
}

TEST_CASE("gamma decompose and reconstruct on random palindromic polynomials")
{
    oracle::Rng rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        const long n = oracle::uniform(rng, 0, 14);
        std::vector<mpq_class> g;
        for (long j = 0; j <= n / 2; ++j) {
            g.emplace_back(oracle::uniform(rng, -20, 20), oracle::uniform(rng, 1, 4));
        }
        for (auto& v : g) {
            v.canonicalize();
        }
        const Poly p = from_mpq(oracle::gamma_expand(g, n));
        REQUIRE(is_palindromic(p, n));
        const auto gv = gamma_decompose(p, n);
        REQUIRE(gv.reconstruct() == p);
        REQUIRE(gv.gammas.size() == g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            REQUIRE(gv.gammas[j] == Rational(Integer(g[j].get_num()), Integer(g[j].get_den())));
        }
    }
}
