#include "hoggatt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <thread>

#include "hoggatt/conjectures.hpp"
#include "hoggatt/error.hpp"
#include "hoggatt/hankel.hpp"
#include "hoggatt/narayana.hpp"

namespace hoggatt {

namespace {

struct RegistryEntry {
    Check check;
    std::string_view name;
};

constexpr RegistryEntry kRegistry[] = {
    {Check::Theorem1, "theorem1"},
    {Check::Condensation, "condensation"},
    {Check::ProofRatios, "proof_ratios"},
    {Check::Theorem2, "theorem2"},
    {Check::Catalan, "catalan"},
    {Check::Polynomiality, "polynomiality"},
    {Check::Conjecture3, "conjecture3"},
    {Check::Conjecture4u, "conjecture4_u"},
    {Check::Conjecture4U, "conjecture4_U"},
    {Check::S2ClosedForm, "s2_closed_form"},
};

long parse_long(std::string_view text, std::string_view whole)
{
    long v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        raise(ErrorCode::Parse, "malformed range '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

std::string_view to_string(Check c) noexcept
{
    for (const auto& e : kRegistry) {
        if (e.check == c) {
            return e.name;
        }
    }
    return "unknown";
}

Check parse_check(std::string_view name)
{
    for (const auto& e : kRegistry) {
        if (e.name == name) {
            return e.check;
        }
    }
    raise(ErrorCode::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

const std::vector<Check>& all_checks()
{
    static const std::vector<Check> checks = [] {
        std::vector<Check> out;
        for (const auto& e : kRegistry) {
            out.push_back(e.check);
        }
        return out;
    }();
    return checks;
}

std::string Range::to_string() const
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

Range Range::parse(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const long v = parse_long(text, text);
        return Range{v, v};
    }
    return Range{parse_long(text.substr(0, dots), text), parse_long(text.substr(dots + 2), text)};
}

void SweepConfig::validate() const
{
    const std::pair<const char*, const Range*> ranges[] = {{"s", &s}, {"m", &m}, {"r", &r}, {"k", &k}};
    for (const auto& [name, range] : ranges) {
        if (range->empty()) {
            raise(ErrorCode::InvalidArgument, std::string("range for ") + name + " is empty (" +
                                                  range->to_string() + ")");
        }
    }
    if (margin < 1) {
        raise(ErrorCode::InvalidArgument, "truncation margin must be >= 1");
    }
    if (budget < 0) {
        raise(ErrorCode::InvalidArgument, "compute budget must be >= 0");
    }
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("HOGGATT_HANKEL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct TaskResult {
    VerificationReport report;
    std::optional<Conjecture3Outcome> outcome;
};

using Task = std::function<TaskResult()>;

VerificationReport skipped(const char* id, std::vector<std::pair<std::string, long>> params,
                           std::string why)
{
    VerificationReport rep;
    rep.id = id;
    rep.params = std::move(params);
    rep.status = Status::Skipped;
    rep.note(std::move(why));
    return rep;
}

Task wrap(std::string id, std::vector<std::pair<std::string, long>> params,
          std::function<TaskResult()> body)
{
    return [id = std::move(id), params = std::move(params), body = std::move(body)]() {
        try {
            return body();
        } catch (const Error& e) {
            VerificationReport rep;
            rep.id = id;
            rep.params = params;
            rep.status = Status::Fail;
            rep.note(std::string("error: ") + e.what());
            return TaskResult{std::move(rep), std::nullopt};
        }
    };
}

TaskResult plain(VerificationReport rep)
{
    return TaskResult{std::move(rep), std::nullopt};
}

void plan(const SweepConfig& cfg, Check check, std::vector<Task>& tasks)
{
    const long k_lo = std::max(cfg.k.lo, 0L);
    const long r_lo = std::max(cfg.r.lo, 1L);
    const long s_lo = std::max(cfg.s.lo, 1L);
    const long m_lo = std::max(cfg.m.lo, 0L);
    const std::size_t margin = cfg.margin;
    const long budget = cfg.budget;
    const std::string id(to_string(check));

    switch (check) {
    case Check::Theorem1:
        for (long m = m_lo; m <= cfg.m.hi; ++m)
            for (long r = r_lo; r <= cfg.r.hi; ++r)
                for (long k = k_lo; k <= cfg.k.hi; ++k) {
                    if (m < r - 1) continue;
                    tasks.push_back(wrap(id, {{"m", m}, {"r", r}, {"k", k}},
                                         [=] { return plain(check_theorem1(k, m, r)); }));
                }
        break;
    case Check::Condensation:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long m = m_lo; m <= cfg.m.hi; ++m)
                for (long r = std::max(r_lo, 2L); r <= cfg.r.hi; ++r)
                    for (long k = k_lo; k <= cfg.k.hi; ++k) {
                        if (m < r - 1) continue;
                        tasks.push_back(wrap(id, {{"s", s}, {"m", m}, {"r", r}, {"k", k}},
                                             [=] { return plain(check_condensation(k, m, r, s)); }));
                    }
        break;
    case Check::ProofRatios:
        for (long m = m_lo; m <= cfg.m.hi; ++m)
            for (long r = std::max(r_lo, 2L); r <= cfg.r.hi; ++r)
                for (long k = k_lo; k <= cfg.k.hi; ++k) {
                    if (m < r - 1) continue;
                    tasks.push_back(wrap(id, {{"m", m}, {"r", r}, {"k", k}},
                                         [=] { return plain(check_proof_ratios(k, m, r)); }));
                }
        break;
    case Check::Theorem2:
        for (long m = m_lo; m <= cfg.m.hi; ++m)
            for (long r = r_lo; r <= cfg.r.hi; ++r) {
                if (m < r - 1) continue;
                tasks.push_back(wrap(id, {{"m", m}, {"r", r}},
                                     [=] { return plain(check_theorem2(m, r, margin)); }));
            }
        break;
    case Check::Catalan:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long r = r_lo; r <= cfg.r.hi; ++r) {
                tasks.push_back(wrap(id, {{"s", s}, {"r", r}},
                                     [=] { return plain(check_catalan_row(r, s, margin)); }));
            }
        break;
    case Check::Polynomiality:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long m = m_lo; m <= cfg.m.hi; ++m)
                for (long r = r_lo; r <= cfg.r.hi; ++r) {
                    std::vector<std::pair<std::string, long>> params{{"s", s}, {"m", m}, {"r", r}};
                    if (r * (m * s - r + 1) > budget) {
                        tasks.push_back([=] {
                            return plain(skipped("polynomiality", params, "exceeds compute budget"));
                        });
                        continue;
                    }
                    tasks.push_back(wrap(id, params, [=] { return plain(check_polynomiality(s, m, r)); }));
                }
        break;
    case Check::Conjecture3:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long m = m_lo; m <= cfg.m.hi; ++m)
                for (long r = r_lo; r <= cfg.r.hi; ++r) {
                    if (m < r - 1) continue;
                    std::vector<std::pair<std::string, long>> params{{"s", s}, {"m", m}, {"r", r}};
                    if (r * (m * s - r + 1) > budget) {
                        tasks.push_back([=] {
                            return plain(skipped("conjecture3", params, "exceeds compute budget"));
                        });
                        continue;
                    }
                    tasks.push_back(wrap(id, params, [=] {
                        auto outcome = analyze_conjecture3(s, m, r, margin);
                        auto rep = to_report(outcome);
                        return TaskResult{std::move(rep), std::move(outcome)};
                    }));
                }
        break;
    case Check::Conjecture4u:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long m = m_lo; m <= cfg.m.hi; ++m)
                for (long r = std::max(r_lo, s); r <= cfg.r.hi; ++r) {
                    if (m < r - 1) continue;
                    std::vector<std::pair<std::string, long>> params{{"s", s}, {"m", m}, {"r", r}};
                    if (r * (m * s - r + 1) > budget) {
                        tasks.push_back([=] {
                            return plain(skipped("conjecture4_u", params, "exceeds compute budget"));
                        });
                        continue;
                    }
                    tasks.push_back(wrap(id, params, [=] { return plain(check_conjecture4_u(s, m, r)); }));
                }
        break;
    case Check::Conjecture4U:
        for (long s = s_lo; s <= cfg.s.hi; ++s)
            for (long m = m_lo; m <= cfg.m.hi; ++m)
                for (long r = std::max(r_lo, s); r <= cfg.r.hi; ++r) {
                    if (m < s - 1) continue;
                    std::vector<std::pair<std::string, long>> params{{"s", s}, {"m", m}, {"r", r}};
                    if (s * (m * r - s + 1) > budget) {
                        tasks.push_back([=] {
                            return plain(skipped("conjecture4_U", params, "exceeds compute budget"));
                        });
                        continue;
                    }
                    tasks.push_back(wrap(id, params, [=] { return plain(check_conjecture4_U(r, m, s)); }));
                }
        break;
    case Check::S2ClosedForm:
        for (long m = std::max(m_lo, 1L); m <= cfg.m.hi; ++m)
            for (long r = std::max(r_lo, 2L); r <= cfg.r.hi; ++r)
                for (long k = k_lo; k <= cfg.k.hi; ++k) {
                    if (m < r) continue;
                    tasks.push_back(wrap(id, {{"m", m}, {"r", r}, {"k", k}},
                                         [=] { return plain(check_s2_closed_form(r, m, k)); }));
                }
        break;
    }
}

std::vector<TaskResult> run_all(std::vector<Task>& tasks, unsigned threads)
{
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            results[i] = tasks[i]();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (n == 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear(); // joins
    return results;
}

} // namespace

std::vector<VerificationReport> sweep(const SweepConfig& config)
{
    config.validate();
    std::vector<Check> checks;
    for (Check c : all_checks()) {
        if (std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end()) {
            checks.push_back(c);
        }
    }
    const unsigned threads = config.threads > 0 ? config.threads : default_thread_count();
    std::vector<VerificationReport> out;
    for (Check c : checks) {
        std::vector<Task> tasks;
        plan(config, c, tasks);
        auto results = run_all(tasks, threads);
        std::vector<Conjecture3Outcome> outcomes;
        for (auto& res : results) {
            out.push_back(std::move(res.report));
            if (res.outcome) {
                outcomes.push_back(std::move(*res.outcome));
            }
        }
        if (c == Check::Conjecture3) {
            out.push_back(check_catalan_value_reading(outcomes));
        }
    }
    return out;
}

} // namespace hoggatt
