// Command-line front end.  Talks to the library only through hoggatt_c.h.
//
//   hoggatt triangle --r 3 --rows 8 [--format csv]
//   hoggatt hankel --s 1 --m 5 --r 3 --k-range 0..6
//   hoggatt verify --checks theorem1 --r 1..3 --m 0..8 --k-range 0..12 --out report.json
//   hoggatt gamma 1,3,1 --n 2
//
// Exit codes: 0 success, 1 a verification failed, 2 bad arguments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoggatt_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CString {
    char* p = nullptr;
    ~CString() { hh_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Usage {
    std::string message;
};

void check(hh_status st)
{
    if (st != HH_OK) {
        throw Usage{hh_last_error()};
    }
}

// --r style numbers: a single value.  Verify accepts ranges for the same flags.
long single_value(const std::string& text, const char* flag)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw Usage{std::string("--") + flag + " expects an integer, got '" + text + "'"};
}

std::pair<long, long> parse_k_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = single_value(text, "k-range");
        return {v, v};
    }
    return {single_value(text.substr(0, dots), "k-range"), single_value(text.substr(dots + 2), "k-range")};
}

hh_format parse_format(const std::string& name)
{
    hh_format f{};
    check(hh_parse_format(name.c_str(), &f));
    return f;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Usage{"cannot open '" + out + "' for writing"};
    }
    f << text;
    if (!f.flush()) {
        throw Usage{"failed writing '" + out + "'"};
    }
}

// Defaults live here; each subcommand only overrides what it is given.
struct Options {
    std::string s = "1";
    std::string m;
    std::string r;
    std::string k_range;
    long rows = 8;
    std::string format = "json";
    std::string out;
    long margin = 5;
    long budget = 40;
    std::string checks = "all";
    std::string coeffs;
    long n = -1;
};

int run_triangle(const Options& o)
{
    const long r = single_value(o.r.empty() ? "1" : o.r, "r");
    CString text;
    check(hh_triangle(r, o.rows, parse_format(o.format), &text.p));
    emit(text.str(), o.out);
    return kExitOk;
}

int run_hankel(const Options& o)
{
    if (o.m.empty() || o.r.empty()) {
        throw Usage{"hankel needs --m and --r"};
    }
    const auto [lo, hi] = parse_k_range(o.k_range.empty() ? "0..6" : o.k_range);
    CString text;
    check(hh_hankel_sequence(single_value(o.s, "s"), single_value(o.m, "m"), single_value(o.r, "r"), lo, hi,
                             parse_format(o.format), &text.p));
    emit(text.str(), o.out);
    return kExitOk;
}

int run_verify(const Options& o)
{
    const hh_format format = parse_format(o.format);
    hh_sweep_config* raw = nullptr;
    check(hh_sweep_config_create(&raw));
    std::unique_ptr<hh_sweep_config, decltype(&hh_sweep_config_destroy)> cfg(raw, &hh_sweep_config_destroy);

    check(hh_sweep_config_parse_range(cfg.get(), HH_AXIS_S, o.s.c_str()));
    if (!o.m.empty()) {
        check(hh_sweep_config_parse_range(cfg.get(), HH_AXIS_M, o.m.c_str()));
    }
    if (!o.r.empty()) {
        check(hh_sweep_config_parse_range(cfg.get(), HH_AXIS_R, o.r.c_str()));
    }
    if (!o.k_range.empty()) {
        check(hh_sweep_config_parse_range(cfg.get(), HH_AXIS_K, o.k_range.c_str()));
    }
    check(hh_sweep_config_set_checks(cfg.get(), o.checks.c_str()));
    check(hh_sweep_config_set_margin(cfg.get(), o.margin));
    check(hh_sweep_config_set_budget(cfg.get(), o.budget));

    hh_sweep_result* res_raw = nullptr;
    check(hh_sweep_run(cfg.get(), &res_raw));
    std::unique_ptr<hh_sweep_result, decltype(&hh_sweep_result_destroy)> res(res_raw, &hh_sweep_result_destroy);

    CString text;
    check(hh_sweep_result_render(res.get(), format, &text.p));
    emit(text.str(), o.out);

    size_t total = 0, passed = 0, failed = 0, skipped = 0, mismatched = 0;
    check(hh_sweep_result_counts(res.get(), &total, &passed, &failed, &skipped, &mismatched));
    std::cerr << "checked " << total << ": " << passed << " pass, " << failed << " fail, " << mismatched
              << " mismatch, " << skipped << " skipped\n";
    return failed + mismatched > 0 ? kExitFailed : kExitOk;
}

// A config error still leaves a well-formed report behind.
void emit_error_report(const Options& o, const std::string& message)
{
    if (o.out.empty() || o.out == "-") {
        return;
    }
    std::string text;
    if (o.format == "csv") {
        text = "id,s,m,r,k,status,lhs,rhs,notes\n";
    } else {
        nlohmann::ordered_json j;
        j["version"] = hh_version();
        j["config"] = nullptr;
        j["results"] = nlohmann::ordered_json::array();
        j["error"] = message;
        text = j.dump(2) + "\n";
    }
    try {
        emit(text, o.out);
    } catch (const Usage&) {
    }
}

int run_gamma(const Options& o)
{
    CString text;
    int palindromic = 0;
    int positive = 0;
    check(hh_gamma(o.coeffs.c_str(), o.n, &text.p, &palindromic, &positive));
    emit(text.str() + "\n", o.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hoggatt binomials, Hankel determinants and identity sweeps"};
    app.set_version_flag("--version", std::string(hh_version()));
    app.require_subcommand(1);

    Options o;
    const std::string formats = "json|csv";

    auto* tri = app.add_subcommand("triangle", "print the r-Hoggatt triangle");
    tri->add_option("--r", o.r, "dimension r >= 1")->default_str("1");
    tri->add_option("--rows", o.rows, "number of rows")->default_str("8");
    tri->add_option("--format", o.format, formats)->default_str("json");
    tri->add_option("--out", o.out, "output file (default stdout)");

    auto* han = app.add_subcommand("hankel", "print d_k(s, m, r) over a k range");
    han->add_option("--s", o.s, "column family s >= 1")->default_str("1");
    han->add_option("--m", o.m, "column shift m")->required();
    han->add_option("--r", o.r, "matrix order r >= 0")->required();
    han->add_option("--k-range", o.k_range, "lo..hi")->default_str("0..6");
    han->add_option("--format", o.format, formats)->default_str("json");
    han->add_option("--out", o.out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "run identity checks over a parameter grid");
    ver->add_option("--s", o.s, "s range, lo..hi")->default_str("1");
    ver->add_option("--m", o.m, "m range, lo..hi")->default_str("0..8");
    ver->add_option("--r", o.r, "r range, lo..hi")->default_str("1..3");
    ver->add_option("--k-range", o.k_range, "k range, lo..hi")->default_str("0..12");
    ver->add_option("--checks", o.checks, std::string("comma list, 'all' or 'none': ") + hh_known_checks())
        ->default_str("all");
    ver->add_option("--margin", o.margin, "extra series terms beyond the degree bound")->default_str("5");
    ver->add_option("--budget", o.budget, "skip points whose extraction degree exceeds this")->default_str("40");
    ver->add_option("--format", o.format, formats)->default_str("json");
    ver->add_option("--out", o.out, "report file (default stdout)");

    auto* gam = app.add_subcommand("gamma", "gamma vector of a palindromic polynomial");
    gam->add_option("coeffs", o.coeffs, "comma-separated coefficients, constant term first")->required();
    gam->add_option("--n", o.n, "center of symmetry (default: degree)");
    gam->add_option("--out", o.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tri->parsed()) {
            return run_triangle(o);
        }
        if (han->parsed()) {
            return run_hankel(o);
        }
        if (ver->parsed()) {
            try {
                return run_verify(o);
            } catch (const Usage& u) {
                emit_error_report(o, u.message);
                throw;
            }
        }
        return run_gamma(o);
    } catch (const Usage& u) {
        std::cerr << "error: " << u.message << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
