#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace symidx {

enum class Provenance { paper, trivial, derived };
enum class Status { pass, fail, skip };

struct Outcome {
  std::string name;
  int criterion = 0;
  Provenance provenance = Provenance::derived;
  Status status = Status::fail;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  std::string filter;                 // run only checks whose name contains this
  bool inject_jacobi_fault = false;   // corrupt structure constants in the Jacobi-identity checks
};

/// Runs the acceptance checks at the default tolerances. Failures are
/// reported as outcomes, never thrown.
std::vector<Outcome> run_verification(const VerifyOptions& options = {});

/// Number of acceptance criteria and their one-line titles.
constexpr int kCriteria = 8;
const char* criterion_title(int criterion);

std::string to_string(Provenance p);
std::string to_string(Status s);
nlohmann::json to_json(const std::vector<Outcome>& outcomes);

}  // namespace symidx
