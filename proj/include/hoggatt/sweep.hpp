#ifndef HOGGATT_SWEEP_HPP
#define HOGGATT_SWEEP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoggatt/report.hpp"

namespace hoggatt {

enum class Check {
    Theorem1,
    Condensation,
    ProofRatios,
    Theorem2,
    Catalan,
    Polynomiality,
    Conjecture3,
    Conjecture4u,
    Conjecture4U,
    S2ClosedForm,
};

std::string_view to_string(Check c) noexcept;
// Throws InvalidArgument for a name outside the registry.
Check parse_check(std::string_view name);
const std::vector<Check>& all_checks();

/// Closed integer interval lo..hi.
struct Range {
    long lo = 0;
    long hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(long v) const { return lo <= v && v <= hi; }
    std::string to_string() const;

    // "a..b" or "a"; throws Parse.
    static Range parse(std::string_view text);
};

struct SweepConfig {
    Range s{1, 1};
    Range m{0, 8};
    Range r{1, 3};
    Range k{0, 12};
    std::vector<Check> checks;
    std::size_t margin = 5;
    // Points with r(ms-r+1) above the budget are reported as skipped.
    long budget = 40;
    // 0 means "pick from the environment".
    unsigned threads = 0;

    // Throws InvalidArgument: every range non-empty, margin >= 1.
    void validate() const;
};

/// Worker count: HOGGATT_HANKEL_THREADS if set and positive, otherwise the
/// hardware concurrency.
unsigned default_thread_count();

/// Runs every enabled check over the lattice.  Output is ordered by check
/// (registry order) and then by parameters, independent of scheduling.
std::vector<VerificationReport> sweep(const SweepConfig& config);

} // namespace hoggatt

#endif
