#include "hoggatt/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hoggatt {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Poly Poly::constant(const Rational& c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::one_plus_x_power(std::size_t n)
{
    std::vector<Rational> v;
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        v.emplace_back(binomial(static_cast<long>(n), static_cast<long>(i)));
    }
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

long Poly::degree() const
{
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

Rational Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational Poly::leading() const
{
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

Poly Poly::shifted(std::size_t power) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> v(power);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

Poly Poly::unshifted(std::size_t power) const
{
    for (std::size_t i = 0; i < std::min(power, coeffs_.size()); ++i) {
        if (!coeffs_[i].is_zero()) {
            raise(ErrorCode::Domain, "polynomial " + to_string() + " is not divisible by x^" +
                                         std::to_string(power));
        }
    }
    if (power >= coeffs_.size()) {
        return {};
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(power), coeffs_.end()));
}

bool Poly::all_integer() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

std::string Poly::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1L);
        if (i == 0 || !unit) {
            os << mag;
        }
        if (i >= 1) {
            os << "x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

Poly Poly::operator-() const
{
    Poly out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    return *this += -o;
}

Poly& Poly::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(v));
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order)
{
    return TruncatedSeries(std::vector<Rational>(order, Rational(1L)));
}

const Rational& TruncatedSeries::coeff(std::size_t i) const
{
    if (i >= coeffs_.size()) {
        raise(ErrorCode::TruncationTooShort,
              "coefficient " + std::to_string(i) + " is beyond the truncation order " +
                  std::to_string(coeffs_.size()));
    }
    return coeffs_[i];
}

TruncatedSeries TruncatedSeries::shifted(std::size_t power) const
{
    std::vector<Rational> v(power);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(v));
}

namespace {

// One pass of c_i <- c_i - c_{i-1}, i.e. multiplication by (1 - x).
void difference_in_place(std::vector<Rational>& c)
{
    for (std::size_t i = c.size(); i-- > 1;) {
        c[i] -= c[i - 1];
    }
}

} // namespace

Poly scale_by_one_minus_x_power(const Poly& p, std::size_t n)
{
    std::vector<Rational> c = p.coeffs();
    c.resize(c.empty() ? 0 : c.size() + n);
    for (std::size_t pass = 0; pass < n; ++pass) {
        difference_in_place(c);
    }
    return Poly(std::move(c));
}

TruncatedSeries scale_by_one_minus_x_power(const TruncatedSeries& f, std::size_t n)
{
    std::vector<Rational> c = f.coeffs();
    for (std::size_t pass = 0; pass < n; ++pass) {
        difference_in_place(c);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries divide_by_one_minus_x_power(const TruncatedSeries& f, std::size_t n)
{
    std::vector<Rational> c = f.coeffs();
    for (std::size_t pass = 0; pass < n; ++pass) {
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i] += c[i - 1];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& f, std::size_t b)
{
    std::vector<Rational> c = f.coeffs();
    for (std::size_t pass = 0; pass < b && !c.empty(); ++pass) {
        std::vector<Rational> next(c.size() - 1);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            next[i] = c[i + 1] * Rational(static_cast<long>(i + 1));
        }
        c = std::move(next);
    }
    if (b > f.order()) {
        c.clear();
    }
    return TruncatedSeries(std::move(c));
}

Poly extract_polynomial(const TruncatedSeries& f, long degree_bound, std::size_t margin)
{
    const long bound = std::max(degree_bound, -1L);
    const std::size_t needed = static_cast<std::size_t>(bound + 1) + margin;
    if (f.order() < needed) {
        raise(ErrorCode::TruncationTooShort,
              "series known to order " + std::to_string(f.order()) + " cannot certify degree <= " +
                  std::to_string(degree_bound) + " with margin " + std::to_string(margin));
    }
    const auto& c = f.coeffs();
    for (std::size_t i = static_cast<std::size_t>(bound + 1); i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            raise(ErrorCode::DegreeOverflow, "nonzero coefficient " + c[i].to_string() +
                                                 " at x^" + std::to_string(i) +
                                                 " beyond degree bound " +
                                                 std::to_string(degree_bound));
        }
    }
    return Poly(std::vector<Rational>(c.begin(), c.begin() + (bound + 1)));
}

Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    if (points.empty()) {
        raise(ErrorCode::InvalidArgument, "interpolation needs at least one point");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                raise(ErrorCode::DuplicateAbscissa,
                      "abscissa " + points[i].first.to_string() + " repeated");
            }
        }
    }
    // Newton divided differences, then expansion of the Newton form.
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }
    Poly acc = Poly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * Poly(std::vector<Rational>{-points[i].first, Rational(1L)}) +
              Poly::constant(dd[i]);
    }
    return acc;
}

std::pair<Poly, Rational> primitive_form(const Poly& p)
{
    if (p.is_zero()) {
        return {Poly(), Rational()};
    }
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        const Integer scaled = (c * Rational(den_lcm)).to_integer();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scalar(num_gcd, den_lcm);
    if (p.leading().sign() < 0) {
        scalar = -scalar;
    }
    return {p * (Rational(1L) / scalar), scalar};
}

bool is_palindromic(const Poly& p, long n)
{
    if (n < 0 || (!p.is_zero() && p.degree() > n)) {
        return false;
    }
    for (long i = 0; i <= n; ++i) {
        if (p.coeff(static_cast<std::size_t>(i)) != p.coeff(static_cast<std::size_t>(n - i))) {
            return false;
        }
    }
    return true;
}

bool is_unimodal(const Poly& p)
{
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i - 1] <= c[i]) {
        ++i;
    }
    while (i < c.size() && c[i - 1] >= c[i]) {
        ++i;
    }
    return i >= c.size();
}

Poly GammaVector::reconstruct() const
{
    Poly acc;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        const long rest = center - 2 * static_cast<long>(j);
        if (rest < 0 || gammas[j].is_zero()) {
            continue;
        }
        acc += Poly::one_plus_x_power(static_cast<std::size_t>(rest)).shifted(j) * gammas[j];
    }
    return acc;
}

bool GammaVector::positive() const
{
    std::size_t last = gammas.size();
    while (last > 0 && gammas[last - 1].is_zero()) {
        --last;
    }
    if (last == 0) {
        return false;
    }
    return std::all_of(gammas.begin(), gammas.begin() + static_cast<long>(last),
                       [](const Rational& g) { return g.sign() > 0; });
}

bool GammaVector::nonnegative() const
{
    return std::all_of(gammas.begin(), gammas.end(),
                       [](const Rational& g) { return g.sign() >= 0; });
}

GammaVector gamma_decompose(const Poly& p, long n)
{
    if (!is_palindromic(p, n)) {
        raise(ErrorCode::NotPalindromic,
              p.to_string() + " is not palindromic with center " + std::to_string(n) + "/2");
    }
    GammaVector out;
    out.center = n;
    out.gammas.resize(static_cast<std::size_t>(n / 2 + 1));
    // Peel gamma_j x^j (1+x)^{n-2j}; the remainder stays palindromic about
    // n/2 and divisible by x^{j+1}.
    Poly rest = p;
    for (long j = 0; 2 * j <= n; ++j) {
        const Rational g = rest.coeff(static_cast<std::size_t>(j));
        out.gammas[static_cast<std::size_t>(j)] = g;
        if (!g.is_zero()) {
            rest -= Poly::one_plus_x_power(static_cast<std::size_t>(n - 2 * j))
                        .shifted(static_cast<std::size_t>(j)) *
                    g;
        }
    }
    if (!rest.is_zero()) {
        raise(ErrorCode::Internal, "gamma peeling left remainder " + rest.to_string());
    }
    return out;
}

GammaPositivity analyze_gamma(const Poly& p, long n)
{
    GammaPositivity out;
    out.palindromic = is_palindromic(p, n);
    if (out.palindromic) {
        out.gamma = gamma_decompose(p, n);
        out.positive = out.gamma.positive();
    }
    return out;
}

} // namespace hoggatt
