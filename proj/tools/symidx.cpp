// symidx: index and co-index of symmetry of homogeneous spaces.

#include "symidx/augment.hpp"
#include "symidx/catalog.hpp"
#include "symidx/io_json.hpp"
#include "symidx/jacobi.hpp"
#include "symidx/sweep.hpp"
#include "symidx/symmetry.hpp"
#include "symidx/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace symidx;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

double parse_tolerance(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0)) throw InputError(source + " must be a positive number, got '" + text + "'");
  return v;
}

Tolerances<double> tolerances(const std::string& flag) {
  Tolerances<double> tol;
  if (!flag.empty()) {
    tol.rank = parse_tolerance(flag, "--tol");
  } else if (const char* env = std::getenv("SYMIDX_TOL")) {
    tol.rank = parse_tolerance(env, "SYMIDX_TOL");
  }
  return tol;
}

HomogeneousSpace<double> load(const std::string& path, bool augment) {
  auto sp = io::read_space_file(path);
  if (!augment) return sp;
  if (sp.isotropy().dim() != 0) {
    std::cerr << "warning: --augment ignored, the space has nontrivial isotropy\n";
    return sp;
  }
  return augment_left_invariant(sp);
}

int cmd_verify(const std::string& filter, const std::string& fault) {
  VerifyOptions opts;
  opts.filter = filter;
  if (!fault.empty()) {
    if (fault != "jacobi") throw InputError("unknown fault '" + fault + "', expected 'jacobi'");
    opts.inject_jacobi_fault = true;
  }
  const auto outcomes = run_verification(opts);
  std::cout << to_json(outcomes).dump(2) << '\n';
  int failed = 0;
  for (const auto& o : outcomes) {
    if (o.status == Status::fail) {
      ++failed;
      std::cerr << "FAIL " << o.name << ": expected " << o.expected << ", got " << o.actual << '\n';
    }
  }
  std::cerr << outcomes.size() - failed << "/" << outcomes.size() << " checks passed\n";
  return failed ? kFailed : kOk;
}

int cmd_index(const std::string& path, bool augment, const Tolerances<double>& tol) {
  const auto sp = load(path, augment);
  const auto report = transvection_space(sp, tol);
  const auto bound = symmetry_ideal(sp, report, tol);
  io::json out = {{"space", sp.label()}, {"transvection", io::to_json(report)}, {"bound", io::to_json(bound)}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_jacobi(const std::string& path, int direction, bool augment, const Tolerances<double>& tol) {
  const auto sp = load(path, augment);
  const auto report = transvection_space(sp, tol);
  if (direction < 0 || direction >= report.p_space.dim()) {
    throw InputError("direction " + std::to_string(direction) + " out of range: the transvection space has dimension " +
                     std::to_string(report.p_space.dim()));
  }
  const auto spec = jacobi_operator_sym(sp, report.p_space.basis().col(direction), tol);
  io::json out = io::to_json(spec);
  out["space"] = sp.label();
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const std::string& family, const std::map<std::string, std::string>& ranges, bool coupled,
              const std::string& out_path, const Tolerances<double>& tol) {
  std::map<std::string, Range> parsed;
  for (const auto& [key, text] : ranges) {
    if (!text.empty()) parsed[key] = parse_range(text);
  }
  if (family == "so4-so2" && parsed.count("lambda")) {
    for (double l : parsed.at("lambda").values()) {
      if (auto w = so4_so2_warning(l)) std::cerr << "warning: " << *w << '\n';
    }
  }
  const auto rows = run_sweep(family, parsed, coupled, tol.rank);
  if (out_path.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    write_csv(out, rows);
  }
  return kOk;
}

int cmd_catalog_list() {
  for (const auto& name : catalog_names()) std::cout << name << '\n';
  return kOk;
}

int cmd_catalog_emit(const std::string& name) {
  std::cout << io::to_json(catalog_space(name)).dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index and co-index of symmetry of compact homogeneous spaces"};
  app.require_subcommand(1);
  std::string tol_flag;
  app.add_option("--tol", tol_flag, "rank threshold (default 1e-9; also SYMIDX_TOL)");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  std::string filter, fault;
  verify->add_option("--filter", filter, "run only checks whose name contains this");
  verify->add_option("--inject-fault", fault, "negative control: 'jacobi' corrupts structure constants");

  auto* index = app.add_subcommand("index", "transvection and bound reports for a space file");
  std::string space_path;
  bool augment = false;
  index->add_option("--space", space_path, "homogeneous space JSON")->required();
  index->add_flag("--augment", augment, "augment a Lie group by its bi-invariant directions");

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi operator along a transvection direction");
  int direction = 0;
  jacobi->add_option("--space", space_path, "homogeneous space JSON")->required();
  jacobi->add_option("--direction", direction, "basis index in the transvection space")->required();
  jacobi->add_flag("--augment", augment, "augment a Lie group by its bi-invariant directions");

  auto* sweep = app.add_subcommand("sweep", "parameter grid as CSV");
  std::string family, out_path;
  std::map<std::string, std::string> ranges{{"lambda", ""}, {"s", ""}, {"t", ""}, {"rho", ""}};
  bool coupled = false;
  sweep->add_option("--family", family, "so4-so2, spin3-s, spin3-berger or product-spheres")->required();
  for (auto& [key, text] : ranges) sweep->add_option("--" + key, text, "range start:stop:step");
  sweep->add_flag("--coupled", coupled, "so4-so2 with t = 2 - s");
  sweep->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "catalog spaces");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list catalog names");
  auto* emit = catalog->add_subcommand("emit", "write a catalog space as JSON");
  std::string name;
  emit->add_option("name", name, "e.g. so4-so2:0.5,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto tol = tolerances(tol_flag);
    if (*verify) return cmd_verify(filter, fault);
    if (*index) return cmd_index(space_path, augment, tol);
    if (*jacobi) return cmd_jacobi(space_path, direction, augment, tol);
    if (*sweep) return cmd_sweep(family, ranges, coupled, out_path, tol);
    if (catalog->got_subcommand("list")) return cmd_catalog_list();
    return cmd_catalog_emit(name);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error at '" << e.pointer() << "': " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
