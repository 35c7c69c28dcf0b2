#include "handleforge/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace hf {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

static void sort_reports(std::vector<MarginReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const MarginReport& a, const MarginReport& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    if (a.rho != b.rho) return a.rho < b.rho;
    return a.k < b.k;
  });
}

std::string margin_reports_csv(std::vector<MarginReport> reports) {
  sort_reports(reports);
  std::string out = "claim_id,rho,k,r_at_min,margin,pass\n";
  for (const auto& r : reports) {
    out += r.claim_id + "," + format_float(r.rho) + "," + std::to_string(r.k) + "," +
           format_float(r.arg_min) + "," + format_float(r.min_margin) + "," +
           (r.pass ? "1" : "0") + "\n";
  }
  return out;
}

std::string margin_reports_json(std::vector<MarginReport> reports) {
  sort_reports(reports);
  nlohmann::json j;
  j["schema_version"] = 1;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports)
    arr.push_back({{"claim_id", r.claim_id},
                   {"rho", r.rho},
                   {"k", r.k},
                   {"r_lo", r.r_lo},
                   {"r_hi", r.r_hi},
                   {"r_at_min", r.arg_min},
                   {"margin", r.min_margin},
                   {"pass", r.pass}});
  j["reports"] = arr;
  return j.dump(2);
}

}  // namespace hf
