#ifndef HOGGATT_REPORT_HPP
#define HOGGATT_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hoggatt {

enum class Status { Pass, Fail, Skipped, Mismatch };

std::string_view to_string(Status s) noexcept;

/// Outcome of one identity check at one parameter point.  Witness values
/// are exact and rendered as decimal strings (or polynomial text).
struct VerificationReport {
    std::string id;
    // Canonical order: s, m, r, k, then anything check-specific.
    std::vector<std::pair<std::string, long>> params;
    Status status = Status::Pass;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> notes;

    bool failed() const { return status == Status::Fail || status == Status::Mismatch; }
    void note(std::string text) { notes.push_back(std::move(text)); }
    // Downgrades a passing report; never upgrades.
    void fail_with(std::string text, Status s = Status::Fail);
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t mismatched = 0;
};

ReportSummary summarize(const std::vector<VerificationReport>& reports);

} // namespace hoggatt

#endif
