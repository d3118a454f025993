#include "hoggatt/report.hpp"

namespace hoggatt {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Mismatch: return "mismatch";
    }
    return "unknown";
}

void VerificationReport::fail_with(std::string text, Status s)
{
    if (status == Status::Pass || status == Status::Skipped) {
        status = s;
    } else if (s == Status::Fail) {
        status = Status::Fail;
    }
    notes.push_back(std::move(text));
}

ReportSummary summarize(const std::vector<VerificationReport>& reports)
{
    ReportSummary out;
    out.total = reports.size();
    for (const auto& r : reports) {
        switch (r.status) {
        case Status::Pass: ++out.passed; break;
        case Status::Fail: ++out.failed; break;
        case Status::Skipped: ++out.skipped; break;
        case Status::Mismatch: ++out.mismatched; break;
        }
    }
    return out;
}

} // namespace hoggatt
