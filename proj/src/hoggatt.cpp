#include "hoggatt/hoggatt.hpp"

#include <functional>
#include <string>

namespace hoggatt {

void HoggattParams::validate() const
{
    if (n < 0) {
        raise(ErrorCode::InvalidArgument, "Hoggatt binomial needs n >= 0, got " + std::to_string(n));
    }
    if (r < 1) {
        raise(ErrorCode::InvalidArgument, "Hoggatt dimension must be >= 1, got " + std::to_string(r));
    }
}

Integer hoggatt_basic(long n, long r)
{
    if (n < 1 || r < 1) {
        raise(ErrorCode::Domain, "<n>_r needs n >= 1 and r >= 1, got n=" + std::to_string(n) +
                                     " r=" + std::to_string(r));
    }
    return binomial(n + r - 1, r);
}

Integer hoggatt_binomial(const HoggattParams& p)
{
    p.validate();
    if (p.k < 0 || p.k > p.n) {
        return 0;
    }
    Integer num = 1;
    Integer den = 1;
    for (long j = 0; j < p.r; ++j) {
        num *= binomial(p.n + j, p.k);
        den *= binomial(p.k + j, p.k);
    }
    Integer out;
    Integer rem;
    mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) {
        raise(ErrorCode::Internal, "Hoggatt quotient not integral at n=" + std::to_string(p.n) +
                                       " k=" + std::to_string(p.k) + " r=" + std::to_string(p.r));
    }
    return out;
}

std::vector<LFactor> l_factorization(const HoggattParams& p)
{
    p.validate();
    if (p.k < 0 || p.k > p.n) {
        raise(ErrorCode::Domain, "L factorization needs 0 <= k <= n");
    }
    std::vector<LFactor> out;
    out.reserve(static_cast<std::size_t>(p.r));
    for (long j = 0; j < p.r; ++j) {
        const long e = p.k + p.r - 1 - 2 * j;
        const Rational value =
            rising_factorial(Rational(p.n + 1 - p.k + j), e) / rising_factorial(Rational(1 + j), e);
        out.push_back(LFactor{j, value});
    }
    return out;
}

Rational row_genfun_hypergeometric(long n, long r, const Rational& t)
{
    HoggattParams{n, 0, r}.validate();
    const Rational arg = (r % 2 == 0) ? t : -t;
    Rational sum;
    // Term ratio makes every step one multiply; the upper parameter -n
    // vanishes at k = n + 1, so the loop stops there.
    Rational term(1L);
    for (long k = 0; k <= n; ++k) {
        sum += term;
        Rational ratio = arg / Rational(k + 1);
        for (long i = 0; i < r; ++i) {
            ratio *= Rational(-n - i + k);
        }
        for (long b = 2; b <= r; ++b) {
            ratio /= Rational(b + k);
        }
        term *= ratio;
    }
    return sum;
}

Integer ssyt_count_bruteforce(long n, long k, long r)
{
    if (n < 1 || k < 1 || r < 1) {
        raise(ErrorCode::InvalidArgument, "SSYT count needs positive n, k, r");
    }
    if (k * r > 16) {
        raise(ErrorCode::TooLarge, "SSYT enumeration guard: k*r = " + std::to_string(k * r) + " > 16");
    }
    const auto rows = static_cast<std::size_t>(k);
    const auto cols = static_cast<std::size_t>(r);
    std::vector<long> cell(rows * cols, 0);
    Integer count = 0;
    // Fill row-major; each cell is bounded below by its left and upper
    // neighbours and above by n minus the rows still to come beneath it.
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == cell.size()) {
            ++count;
            return;
        }
        const std::size_t i = pos / cols;
        const std::size_t j = pos % cols;
        long lo = 1;
        if (j > 0) {
            lo = std::max(lo, cell[pos - 1]);
        }
        if (i > 0) {
            lo = std::max(lo, cell[pos - cols] + 1);
        }
        const long hi = n - static_cast<long>(rows - 1 - i);
        for (long v = lo; v <= hi; ++v) {
            cell[pos] = v;
            fill(pos + 1);
        }
    };
    fill(0);
    return count;
}

std::vector<std::vector<Integer>> triangle(long r, long rows)
{
    if (r < 1 || rows < 0) {
        raise(ErrorCode::InvalidArgument, "triangle needs r >= 1 and rows >= 0");
    }
    std::vector<std::vector<Integer>> out(static_cast<std::size_t>(rows));
    for (long n = 0; n < rows; ++n) {
        auto& row = out[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(n + 1));
        for (long k = 0; k <= n; ++k) {
            row.push_back(hoggatt_binomial(n, k, r));
        }
    }
    return out;
}

Poly row_polynomial(long n, long r)
{
    std::vector<Rational> c;
    for (long k = 0; k <= n; ++k) {
        c.emplace_back(hoggatt_binomial(n, k, r));
    }
    return Poly(std::move(c));
}

} // namespace hoggatt
