#ifndef HOGGATT_FORMAT_HPP
#define HOGGATT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hoggatt/exact.hpp"
#include "hoggatt/report.hpp"
#include "hoggatt/sweep.hpp"

namespace hoggatt {

enum class Format { Json, Csv };

// "json" or "csv"; throws InvalidArgument.
Format parse_format(std::string_view name);

std::string_view library_version() noexcept;

// Big integers are always rendered as decimal strings.
std::string render_triangle(const std::vector<std::vector<Integer>>& rows, long r, Format f);

std::string render_hankel(long s, long m, long r, long k_lo, const std::vector<Integer>& values, Format f);

/// JSON: {version, config, results: [{id, params, status, lhs, rhs, notes}]}.
/// CSV: one header line then one line per result.  Both are byte-stable for
/// a given config and library version.
std::string render_reports(const SweepConfig& config, const std::vector<VerificationReport>& reports,
                           Format f);

} // namespace hoggatt

#endif
