#include "hoggatt/format.hpp"

#include <sstream>

#include <json.hpp>

#include "hoggatt/error.hpp"

namespace hoggatt {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name)
{
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    raise(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (json|csv)");
}

std::string_view library_version() noexcept
{
    return "1.0.0";
}

namespace {

std::string csv_field(std::string_view v)
{
    if (v.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(v);
    }
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

ordered_json range_json(const Range& r)
{
    return ordered_json{{"lo", r.lo}, {"hi", r.hi}};
}

} // namespace

std::string render_triangle(const std::vector<std::vector<Integer>>& rows, long r, Format f)
{
    if (f == Format::Json) {
        ordered_json j;
        j["r"] = r;
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json jr = ordered_json::array();
            for (const auto& v : row) {
                jr.push_back(v.get_str());
            }
            j["rows"].push_back(std::move(jr));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        os << ",k" << k;
    }
    os << "\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        os << n;
        for (const auto& v : rows[n]) {
            os << "," << v.get_str();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_hankel(long s, long m, long r, long k_lo, const std::vector<Integer>& values, Format f)
{
    if (f == Format::Json) {
        ordered_json j;
        j["s"] = s;
        j["m"] = m;
        j["r"] = r;
        j["values"] = ordered_json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            j["values"].push_back(
                ordered_json{{"k", k_lo + static_cast<long>(i)}, {"d", values[i].get_str()}});
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "k,d\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << k_lo + static_cast<long>(i) << "," << values[i].get_str() << "\n";
    }
    return os.str();
}

std::string render_reports(const SweepConfig& config, const std::vector<VerificationReport>& reports,
                           Format f)
{
    if (f == Format::Json) {
        ordered_json j;
        j["version"] = std::string(library_version());
        ordered_json cfg;
        cfg["s"] = range_json(config.s);
        cfg["m"] = range_json(config.m);
        cfg["r"] = range_json(config.r);
        cfg["k"] = range_json(config.k);
        cfg["checks"] = ordered_json::array();
        for (Check c : all_checks()) {
            for (Check enabled : config.checks) {
                if (enabled == c) {
                    cfg["checks"].push_back(std::string(to_string(c)));
                    break;
                }
            }
        }
        cfg["margin"] = config.margin;
        cfg["budget"] = config.budget;
        j["config"] = std::move(cfg);
        j["results"] = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json jr;
            jr["id"] = rep.id;
            ordered_json params = ordered_json::object();
            for (const auto& [name, value] : rep.params) {
                params[name] = value;
            }
            jr["params"] = std::move(params);
            jr["status"] = std::string(to_string(rep.status));
            jr["lhs"] = rep.lhs;
            jr["rhs"] = rep.rhs;
            jr["notes"] = rep.notes;
            j["results"].push_back(std::move(jr));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "id,s,m,r,k,status,lhs,rhs,notes\n";
    for (const auto& rep : reports) {
        auto param = [&](const char* name) -> std::string {
            for (const auto& [n, v] : rep.params) {
                if (n == name) {
                    return std::to_string(v);
                }
            }
            return "";
        };
        std::string notes;
        for (const auto& n : rep.notes) {
            notes += (notes.empty() ? "" : " | ") + n;
        }
        os << csv_field(rep.id) << "," << param("s") << "," << param("m") << "," << param("r") << ","
           << param("k") << "," << to_string(rep.status) << "," << csv_field(rep.lhs) << ","
           << csv_field(rep.rhs) << "," << csv_field(notes) << "\n";
    }
    return os.str();
}

} // namespace hoggatt
