#pragma once

#include "symidx/numeric.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace symidx {

/// Inclusive grid start, start + step, ..., up to stop.
struct Range {
  double start = 0;
  double stop = 0;
  double step = 1;
  std::vector<double> values() const;
};

/// Parses "start:stop:step" (or a single number).
Range parse_range(const std::string& text);

struct SweepRecord {
  std::optional<double> lambda, s, t, rho;
  Eigen::Index index = 0;
  Eigen::Index coindex = 0;
  Eigen::Index dim_transvection = 0;
  bool psd_ok = false;
  Eigen::Index bound_lhs = 0;
  Eigen::Index bound_rhs = 0;
  bool equality = false;
  std::map<std::string, double> residuals;
};

/// Families: "so4-so2" (lambda, s, and t unless coupled), "spin3-s" (s),
/// "spin3-berger" (t, augmented; t = 2 is skipped), "product-spheres" (rho).
/// Rows come back sorted by (lambda, s, t, rho).
std::vector<SweepRecord> run_sweep(const std::string& family, const std::map<std::string, Range>& ranges,
                                   bool coupled, double rank_tol = 1e-9);

std::vector<std::string> sweep_families();

extern const char* const kSweepHeader;

/// CSV with 12 significant digits; parameters that do not apply stay empty.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& rows);

std::string format_number(double v);

}  // namespace symidx
