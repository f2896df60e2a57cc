#include "symidx/sweep.hpp"

#include "symidx/augment.hpp"
#include "symidx/catalog.hpp"
#include "symidx/jacobi.hpp"
#include "symidx/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

namespace symidx {

const char* const kSweepHeader =
    "lambda,s,t,rho,index,coindex,dim_transvection,psd_ok,bound_lhs,bound_rhs,equality";

std::vector<double> Range::values() const {
  if (!(step > 0.0)) throw InputError("range step must be positive");
  if (stop < start) throw InputError("range stop must not precede start");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> v;
  for (long i = 0; i < count; ++i) v.push_back(start + static_cast<double>(i) * step);
  return v;
}

Range parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("invalid range '" + text + "': expected start:stop:step");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw InputError("invalid range '" + text + "': expected start:stop:step");
    }
    parts.push_back(v);
  }
  if (parts.size() == 1) return {parts[0], parts[0], 1.0};
  if (parts.size() != 3) throw InputError("invalid range '" + text + "': expected start:stop:step");
  Range r{parts[0], parts[1], parts[2]};
  r.values();
  return r;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

SweepRecord analyse(const HomogeneousSpace<double>& sp, double rank_tol) {
  Tolerances<double> tol;
  tol.rank = rank_tol;
  const auto report = transvection_space(sp, tol);
  const auto bound = symmetry_ideal(sp, report, tol);
  SweepRecord r;
  r.index = report.index;
  r.coindex = report.coindex;
  r.dim_transvection = report.p_space.dim();
  r.psd_ok = true;
  for (Eigen::Index c = 0; c < report.p_space.dim(); ++c) {
    if (!jacobi_operator_sym(sp, report.p_space.basis().col(c), tol).psd) r.psd_ok = false;
  }
  r.bound_lhs = bound.lhs;
  r.bound_rhs = bound.rhs;
  r.equality = bound.equality;
  r.residuals["koszul_skewness"] = koszul_skewness_residual(sp);
  r.residuals["koszul_lift"] = koszul_lift_residual(sp);
  r.residuals["involutive"] = involutive_residual(sp, report);
  return r;
}

const Range& need(const std::map<std::string, Range>& ranges, const std::string& key, const std::string& family) {
  const auto it = ranges.find(key);
  if (it == ranges.end()) throw InputError("sweep family '" + family + "' needs --" + key);
  return it->second;
}

void only(const std::map<std::string, Range>& ranges, const std::vector<std::string>& allowed,
          const std::string& family) {
  for (const auto& [key, range] : ranges) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("sweep family '" + family + "' does not take --" + key);
    }
  }
}

}  // namespace

std::vector<std::string> sweep_families() { return {"so4-so2", "spin3-s", "spin3-berger", "product-spheres"}; }

std::vector<SweepRecord> run_sweep(const std::string& family, const std::map<std::string, Range>& ranges,
                                   bool coupled, double rank_tol) {
  std::vector<SweepRecord> rows;
  if (family == "so4-so2") {
    only(ranges, {"lambda", "s", "t"}, family);
    const auto lambdas = need(ranges, "lambda", family).values();
    const auto ss = need(ranges, "s", family).values();
    if (coupled && ranges.count("t")) throw InputError("--coupled fixes t = 2 - s; drop --t");
    const auto ts = coupled ? std::vector<double>{} : need(ranges, "t", family).values();
    for (double l : lambdas)
      for (double s : ss) {
        const auto grid = coupled ? std::vector<double>{2.0 - s} : ts;
        for (double t : grid) {
          SweepRecord r = analyse(so4_so2(l, s, t), rank_tol);
          r.lambda = l;
          r.s = s;
          r.t = t;
          rows.push_back(std::move(r));
        }
      }
  } else if (family == "spin3-s") {
    only(ranges, {"s"}, family);
    for (double s : need(ranges, "s", family).values()) {
      if (!(s > 0.0 && s < 1.0)) throw InputError("spin3-s needs 0 < s < 1");
      SweepRecord r = analyse(spin3_metric(s, 2.0 - s, 2.0), rank_tol);
      r.s = s;
      r.t = 2.0 - s;
      rows.push_back(std::move(r));
    }
  } else if (family == "spin3-berger") {
    only(ranges, {"t"}, family);
    for (double t : need(ranges, "t", family).values()) {
      if (std::abs(t - 2.0) < 1e-12) continue;  // round metric, not in the family
      SweepRecord r = analyse(augment_left_invariant(spin3_metric(t, t, 2.0)), rank_tol);
      r.t = t;
      rows.push_back(std::move(r));
    }
  } else if (family == "product-spheres") {
    only(ranges, {"rho"}, family);
    for (double rho : need(ranges, "rho", family).values()) {
      const auto ps = product_of_spheres(rho);
      SweepRecord r = analyse(ps.space, rank_tol);
      r.rho = rho;
      r.lambda = ps.computed_lambda;
      r.s = ps.computed_s;
      r.t = ps.computed_t;
      rows.push_back(std::move(r));
    }
  } else {
    throw InputError("unknown sweep family '" + family + "'");
  }
  auto key = [](const SweepRecord& r) {
    const double lo = -std::numeric_limits<double>::infinity();
    return std::make_tuple(r.lambda.value_or(lo), r.s.value_or(lo), r.t.value_or(lo), r.rho.value_or(lo));
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << opt(r.lambda) << ',' << opt(r.s) << ',' << opt(r.t) << ',' << opt(r.rho) << ',' << r.index << ','
        << r.coindex << ',' << r.dim_transvection << ',' << (r.psd_ok ? "true" : "false") << ',' << r.bound_lhs
        << ',' << r.bound_rhs << ',' << (r.equality ? "true" : "false") << '\n';
  }
}

}  // namespace symidx
