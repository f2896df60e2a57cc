#pragma once

#include "symidx/catalog.hpp"
#include "symidx/jacobi.hpp"
#include "symidx/symmetry.hpp"

#include <json.hpp>

#include <string>

namespace symidx::io {

using json = nlohmann::json;

/// Malformed JSON input; `pointer` locates the offending value.
class ParseError : public InputError {
 public:
  ParseError(const std::string& pointer, const std::string& message)
      : InputError(message + " at " + (pointer.empty() ? std::string("/") : pointer)), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

json to_json(const LieAlgebra<double>& alg);
LieAlgebra<double> algebra_from_json(const json& j, const std::string& pointer = "");

json to_json(const HomogeneousSpace<double>& sp);
HomogeneousSpace<double> space_from_json(const json& j);
HomogeneousSpace<double> read_space_file(const std::string& path);

json to_json(const Subspace<double>& s);
json to_json(const TransvectionReport<double>& r);
json to_json(const BoundReport<double>& b);
json to_json(const JacobiSpectrum<double>& s);
json to_json(const PolarReport& r);

json matrix_rows(const Matrix<double>& m);
json matrix_columns(const Matrix<double>& m);

}  // namespace symidx::io
