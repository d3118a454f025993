#include "hoggatt_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "hoggatt/format.hpp"
#include "hoggatt/hankel.hpp"
#include "hoggatt/hoggatt.hpp"
#include "hoggatt/narayana.hpp"
#include "hoggatt/poly.hpp"
#include "hoggatt/sweep.hpp"

struct hh_sweep_config {
    hoggatt::SweepConfig config;
};

struct hh_sweep_result {
    hoggatt::SweepConfig config;
    std::vector<hoggatt::VerificationReport> reports;
};

namespace {

thread_local std::string last_error;

hh_status status_for(hoggatt::ErrorCode code)
{
    using hoggatt::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NegativeN:
    case ErrorCode::DuplicateAbscissa: return HH_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain:
    case ErrorCode::PoleEncountered: return HH_ERR_DOMAIN;
    case ErrorCode::ZeroDenominator: return HH_ERR_ZERO_DENOMINATOR;
    case ErrorCode::TooLarge: return HH_ERR_TOO_LARGE;
    case ErrorCode::TruncationTooShort:
    case ErrorCode::DegreeOverflow: return HH_ERR_TRUNCATION;
    case ErrorCode::NotPalindromic: return HH_ERR_NOT_PALINDROMIC;
    case ErrorCode::Parse: return HH_ERR_PARSE;
    case ErrorCode::Io:
    case ErrorCode::Internal: return HH_ERR_INTERNAL;
    }
    return HH_ERR_INTERNAL;
}

template <class F>
hh_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return HH_OK;
    } catch (const hoggatt::Error& e) {
        last_error = e.what();
        return status_for(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HH_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (p == nullptr) {
        hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, std::string(what) + " is null");
    }
}

hoggatt::Format to_format(hh_format f)
{
    switch (f) {
    case HH_FORMAT_JSON: return hoggatt::Format::Json;
    case HH_FORMAT_CSV: return hoggatt::Format::Csv;
    }
    hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "unknown format");
}

hoggatt::Range& axis_range(hoggatt::SweepConfig& cfg, hh_axis axis)
{
    switch (axis) {
    case HH_AXIS_S: return cfg.s;
    case HH_AXIS_M: return cfg.m;
    case HH_AXIS_R: return cfg.r;
    case HH_AXIS_K: return cfg.k;
    }
    hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "unknown axis");
}

std::string join_rationals(const std::vector<hoggatt::Rational>& v)
{
    std::string out;
    for (const auto& q : v) {
        out += (out.empty() ? "" : ",") + q.to_string();
    }
    return out;
}

} // namespace

extern "C" {

const char* hh_version(void)
{
    static const std::string v(hoggatt::library_version());
    return v.c_str();
}

const char* hh_last_error(void)
{
    return last_error.c_str();
}

void hh_free(char* s)
{
    std::free(s);
}

hh_status hh_parse_format(const char* name, hh_format* out)
{
    return guarded([&] {
        require(name, "format name");
        require(out, "output");
        *out = hoggatt::parse_format(name) == hoggatt::Format::Json ? HH_FORMAT_JSON : HH_FORMAT_CSV;
    });
}

hh_status hh_hoggatt_binomial(long n, long k, long r, char** out)
{
    return guarded([&] {
        require(out, "output");
        *out = duplicate(hoggatt::hoggatt_binomial(n, k, r).get_str());
    });
}

hh_status hh_hankel_determinant(long s, long m, long r, long k, char** out)
{
    return guarded([&] {
        require(out, "output");
        *out = duplicate(hoggatt::hankel_determinant({k, m, r, s}).get_str());
    });
}

hh_status hh_catalan(long r, long n, char** out)
{
    return guarded([&] {
        require(out, "output");
        *out = duplicate(hoggatt::catalan_r(r, n).get_str());
    });
}

hh_status hh_narayana(long r, long s, char** out)
{
    return guarded([&] {
        require(out, "output");
        *out = duplicate(join_rationals(hoggatt::narayana_poly(r, s).coeffs()));
    });
}

hh_status hh_triangle(long r, long rows, hh_format format, char** out)
{
    return guarded([&] {
        require(out, "output");
        if (rows < 1) {
            hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "rows must be >= 1");
        }
        *out = duplicate(hoggatt::render_triangle(hoggatt::triangle(r, rows), r, to_format(format)));
    });
}

hh_status hh_hankel_sequence(long s, long m, long r, long k_lo, long k_hi, hh_format format, char** out)
{
    return guarded([&] {
        require(out, "output");
        if (k_lo > k_hi || k_lo < 0) {
            hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "k range must satisfy 0 <= lo <= hi");
        }
        const auto values = hoggatt::hankel_sequence(s, m, r, k_lo, k_hi);
        *out = duplicate(hoggatt::render_hankel(s, m, r, k_lo, values, to_format(format)));
    });
}

hh_status hh_gamma(const char* coeffs, long n, char** out, int* palindromic, int* positive)
{
    return guarded([&] {
        require(coeffs, "coefficients");
        require(out, "output");
        std::vector<hoggatt::Rational> c;
        std::stringstream ss{std::string(coeffs)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            c.push_back(hoggatt::Rational::parse(item));
        }
        if (c.empty()) {
            hoggatt::raise(hoggatt::ErrorCode::Parse, "no coefficients given");
        }
        const hoggatt::Poly p(c);
        const long center = n >= 0 ? n : static_cast<long>(c.size()) - 1;
        const auto gp = hoggatt::analyze_gamma(p, center);
        if (palindromic != nullptr) {
            *palindromic = gp.palindromic ? 1 : 0;
        }
        if (positive != nullptr) {
            *positive = gp.positive ? 1 : 0;
        }
        if (!gp.palindromic) {
            *out = duplicate("not palindromic for n=" + std::to_string(center));
            return;
        }
        *out = duplicate(join_rationals(gp.gamma.gammas) +
                         (gp.positive ? "; gamma-positive" : "; not gamma-positive"));
    });
}

hh_status hh_sweep_config_create(hh_sweep_config** out)
{
    return guarded([&] {
        require(out, "output");
        *out = new hh_sweep_config{};
    });
}

void hh_sweep_config_destroy(hh_sweep_config* cfg)
{
    delete cfg;
}

hh_status hh_sweep_config_set_range(hh_sweep_config* cfg, hh_axis axis, long lo, long hi)
{
    return guarded([&] {
        require(cfg, "config");
        axis_range(cfg->config, axis) = hoggatt::Range{lo, hi};
    });
}

hh_status hh_sweep_config_parse_range(hh_sweep_config* cfg, hh_axis axis, const char* text)
{
    return guarded([&] {
        require(cfg, "config");
        require(text, "range text");
        axis_range(cfg->config, axis) = hoggatt::Range::parse(text);
    });
}

hh_status hh_sweep_config_set_checks(hh_sweep_config* cfg, const char* checks)
{
    return guarded([&] {
        require(cfg, "config");
        require(checks, "checks");
        std::vector<hoggatt::Check> parsed;
        const std::string text(checks);
        if (text == "all") {
            parsed = hoggatt::all_checks();
        } else if (text != "none") {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) {
                    parsed.push_back(hoggatt::parse_check(item));
                }
            }
        }
        cfg->config.checks = std::move(parsed);
    });
}

hh_status hh_sweep_config_set_margin(hh_sweep_config* cfg, long margin)
{
    return guarded([&] {
        require(cfg, "config");
        if (margin < 1) {
            hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "margin must be >= 1");
        }
        cfg->config.margin = static_cast<std::size_t>(margin);
    });
}

hh_status hh_sweep_config_set_budget(hh_sweep_config* cfg, long budget)
{
    return guarded([&] {
        require(cfg, "config");
        if (budget < 0) {
            hoggatt::raise(hoggatt::ErrorCode::InvalidArgument, "budget must be >= 0");
        }
        cfg->config.budget = budget;
    });
}

hh_status hh_sweep_config_set_threads(hh_sweep_config* cfg, unsigned threads)
{
    return guarded([&] {
        require(cfg, "config");
        cfg->config.threads = threads;
    });
}

const char* hh_known_checks(void)
{
    static const std::string names = [] {
        std::string out;
        for (auto c : hoggatt::all_checks()) {
            out += (out.empty() ? "" : ",") + std::string(hoggatt::to_string(c));
        }
        return out;
    }();
    return names.c_str();
}

hh_status hh_sweep_run(const hh_sweep_config* cfg, hh_sweep_result** out)
{
    return guarded([&] {
        require(cfg, "config");
        require(out, "output");
        auto res = std::make_unique<hh_sweep_result>();
        res->config = cfg->config;
        res->reports = hoggatt::sweep(cfg->config);
        *out = res.release();
    });
}

void hh_sweep_result_destroy(hh_sweep_result* res)
{
    delete res;
}

hh_status hh_sweep_result_counts(const hh_sweep_result* res, size_t* total, size_t* passed, size_t* failed,
                                 size_t* skipped, size_t* mismatched)
{
    return guarded([&] {
        require(res, "result");
        const auto s = hoggatt::summarize(res->reports);
        if (total) *total = s.total;
        if (passed) *passed = s.passed;
        if (failed) *failed = s.failed;
        if (skipped) *skipped = s.skipped;
        if (mismatched) *mismatched = s.mismatched;
    });
}

hh_status hh_sweep_result_render(const hh_sweep_result* res, hh_format format, char** out)
{
    return guarded([&] {
        require(res, "result");
        require(out, "output");
        *out = duplicate(hoggatt::render_reports(res->config, res->reports, to_format(format)));
    });
}

} // extern "C"
