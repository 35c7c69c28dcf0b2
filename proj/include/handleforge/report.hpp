#pragma once

#include <string>
#include <vector>

namespace hf {

/// Worst-case margin of one verified claim over a parameter cell.  Margins
/// are normalized as (LHS - RHS)/max(|RHS|, 1) for a claim LHS > RHS, so
/// reports are comparable across scales; pass <=> min_margin > 0.
struct MarginReport {
  std::string claim_id;
  double rho = 0.0;
  int k = 0;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double min_margin = 0.0;
  double arg_min = 0.0;  // r (or tau/s/H0, per claim) at the minimum
  bool pass = false;
};

/// Fixed-format float used everywhere in reports (%.12e).
std::string format_float(double v);

/// CSV with header "claim_id,rho,k,r_at_min,margin,pass"; rows sorted by
/// (claim_id, rho, k).
std::string margin_reports_csv(std::vector<MarginReport> reports);

/// JSON array of report objects, wrapped with a schema_version field.
std::string margin_reports_json(std::vector<MarginReport> reports);

}  // namespace hf
