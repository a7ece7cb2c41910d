#include "eur/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_row(const BoundReport& r) {
  if (!r.params || !r.q_d) throw PreconditionError("csv_row: report has no horizon parameters");
  const double fields[] = {r.params->omega(), r.params->r0(), *r.q_d,       r.lhs,      r.u1,
                           r.u2,              r.delta1,       r.delta2,     r.h_a,      r.mutual_info,
                           r.holevo_m1,       r.holevo_m2,    r.h_m1,       r.h_m2,     r.c1};
  std::string line = r.state_label;
  for (double f : fields) {
    line += ',';
    line += format_number(f);
  }
  return line;
}

std::string render_csv(std::span<const BoundReport> reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : reports) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["state_label"] = r.state_label;
  if (r.params) {
    nlohmann::json p{{"omega", r.params->omega()}, {"r0", r.params->r0()}};
    if (const auto& phys = r.params->physical()) {
      p["mass"] = phys->mass;
      p["frequency"] = phys->frequency;
      p["radius"] = phys->radius;
    }
    j["params"] = std::move(p);
  } else {
    j["params"] = nullptr;
  }
  j["q_d"] = r.q_d ? nlohmann::json(*r.q_d) : nlohmann::json(nullptr);
  j["lhs"] = r.lhs;
  j["u1"] = r.u1;
  j["u2"] = r.u2;
  j["delta1"] = r.delta1;
  j["delta2"] = r.delta2;
  j["mu_bound"] = r.mu_bound;
  j["berta_no_memory"] = r.berta_no_memory;
  j["h_a"] = r.h_a;
  j["mutual_info"] = r.mutual_info;
  j["holevo_m1"] = r.holevo_m1;
  j["holevo_m2"] = r.holevo_m2;
  j["h_m1"] = r.h_m1;
  j["h_m2"] = r.h_m2;
  j["c1"] = r.c1;
  return j;
}

std::string render_json(std::span<const BoundReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<double> parse_csv_numbers(std::string_view line) {
  std::vector<double> out;
  std::size_t pos = line.find(',');
  if (pos == std::string_view::npos) throw PreconditionError("parse_csv_numbers: no numeric fields");
  while (pos != std::string_view::npos) {
    const std::size_t start = pos + 1;
    pos = line.find(',', start);
    const std::string field(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    std::istringstream is(field);
    is.imbue(std::locale::classic());
    double x = 0.0;
    if (!(is >> x)) throw PreconditionError("parse_csv_numbers: bad field '" + field + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace eur
