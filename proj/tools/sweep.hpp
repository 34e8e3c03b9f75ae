#pragma once

#include <string>
#include <vector>

#include "grid.hpp"
#include "reciplab/serialize.hpp"

namespace reciplab::cli {

struct Report {
  std::string theorem;
  Json params = Json::object();
  Json lhs, rhs, residual;
  std::string status;  // pass, fail or skipped-pole
  Json extra;          // valuation bounds, findings; null when unused
  double millis = 0;
};

// Known theorem ids in display order.
const std::vector<std::string>& theorem_ids();
// Keys a theorem accepts and the default grid used when none is given.
Grid default_grid(const std::string& theorem);

// Evaluates every grid point, in grid order regardless of `jobs`.
std::vector<Report> run_sweep(const std::string& theorem, const Grid& grid, unsigned jobs);

Json report_json(const Report& r, bool timing);
std::string report_csv_header();
std::string report_csv(const Report& r);
std::string report_text(const Report& r);

}  // namespace reciplab::cli
