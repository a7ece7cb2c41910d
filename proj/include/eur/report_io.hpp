#pragma once

// Serialization of BoundReport rows: CSV (fixed header, 12 significant
// digits, LF endings) and JSON.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eur/bounds.hpp"

namespace eur {

inline constexpr std::string_view kCsvHeader =
    "state,omega,r0,q_d,lhs,u1,u2,delta1,delta2,h_a,mutual_info,holevo_m1,holevo_m2,h_m1,h_m2,c1";

/// printf "%.12g"
std::string format_number(double x);

/// One CSV line without the trailing newline. Requires params and q_d.
std::string csv_row(const BoundReport& r);

/// Header plus one LF-terminated line per report.
std::string render_csv(std::span<const BoundReport> reports);

nlohmann::json to_json(const BoundReport& r);
std::string render_json(std::span<const BoundReport> reports);

/// Parses a CSV data line back into the numeric fields, in header order
/// (state label excluded).
std::vector<double> parse_csv_numbers(std::string_view line);

}  // namespace eur
