#include "symidx/io_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace symidx::io {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

double number(const json& j, const std::string& pointer) {
  if (!j.is_number()) throw ParseError(pointer, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(pointer, "expected a finite number");
  return v;
}

const json& array(const json& j, const std::string& pointer) {
  if (!j.is_array()) throw ParseError(pointer, "expected an array");
  return j;
}

Vector<double> vector_of(const json& j, const std::string& pointer, Eigen::Index length) {
  array(j, pointer);
  if (length >= 0 && static_cast<Eigen::Index>(j.size()) != length) {
    throw ParseError(pointer, "expected " + std::to_string(length) + " entries");
  }
  Vector<double> v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], child(pointer, i));
  return v;
}

// list of vectors -> matrix with the vectors as columns
Matrix<double> columns_of(const json& j, const std::string& pointer, Eigen::Index length) {
  array(j, pointer);
  Matrix<double> m(length, static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = vector_of(j[c], child(pointer, c), length);
  return m;
}

Matrix<double> rows_of(const json& j, const std::string& pointer, Eigen::Index rows, Eigen::Index cols) {
  array(j, pointer);
  if (static_cast<Eigen::Index>(j.size()) != rows) {
    throw ParseError(pointer, "expected " + std::to_string(rows) + " rows");
  }
  Matrix<double> m(rows, cols);
  for (std::size_t r = 0; r < j.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = vector_of(j[r], child(pointer, r), cols).transpose();
  return m;
}

const json& member(const json& j, const std::string& key, const std::string& pointer) {
  if (!j.contains(key)) throw ParseError(pointer, "missing required member '" + key + "'");
  return j.at(key);
}

}  // namespace

json matrix_rows(const Matrix<double>& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

json matrix_columns(const Matrix<double>& m) { return matrix_rows(Matrix<double>(m.transpose())); }

json to_json(const LieAlgebra<double>& alg) {
  const auto n = alg.dim();
  json structure = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json ci = json::array();
    for (Eigen::Index j = 0; j < n; ++j) {
      json cij = json::array();
      for (Eigen::Index k = 0; k < n; ++k) cij.push_back(alg.structure(i, j, k));
      ci.push_back(cij);
    }
    structure.push_back(ci);
  }
  return {{"dim", n}, {"labels", alg.labels()}, {"structure", structure}, {"convention", "killing-field"}};
}

LieAlgebra<double> algebra_from_json(const json& j, const std::string& pointer) {
  if (j.is_string()) {
    try {
      return preset(j.get<std::string>()).algebra;
    } catch (const InputError& e) {
      throw ParseError(pointer, e.what());
    }
  }
  if (!j.is_object()) throw ParseError(pointer, "expected a preset name or an inline algebra");
  const json& dim = member(j, "dim", pointer);
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw ParseError(child(pointer, "dim"), "expected a positive integer");
  const auto n = static_cast<std::size_t>(dim.get<long>());
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = array(j.at("labels"), child(pointer, "labels"));
    if (l.size() != n) throw ParseError(child(pointer, "labels"), "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) throw ParseError(child(child(pointer, "labels"), i), "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  const std::string sp = child(pointer, "structure");
  const json& s = array(member(j, "structure", pointer), sp);
  if (s.size() != n) throw ParseError(sp, "expected " + std::to_string(n) + " entries");
  std::vector<std::vector<std::vector<double>>> c(n, std::vector<std::vector<double>>(n, std::vector<double>(n)));
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = child(sp, a);
    if (!s[a].is_array() || s[a].size() != n) throw ParseError(pa, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      const Vector<double> v = vector_of(s[a][b], child(pa, b), static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n; ++k) c[a][b][k] = v(static_cast<Eigen::Index>(k));
    }
  }
  return LieAlgebra<double>::from_structure(c, labels);
}

json to_json(const HomogeneousSpace<double>& sp) {
  json j = {{"label", sp.label()},
            {"algebra", to_json(sp.algebra())},
            {"isotropy", matrix_columns(sp.isotropy().basis())},
            {"complement", matrix_columns(sp.complement())},
            {"metric", matrix_rows(sp.metric().gram())}};
  if (sp.representation()) {
    json gens = json::array();
    for (const auto& g : sp.representation()->generators) gens.push_back(matrix_rows(g));
    j["representation"] = gens;
  }
  return j;
}

HomogeneousSpace<double> space_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected a homogeneous space object");
  const json& a = member(j, "algebra", "");
  LieAlgebra<double> algebra = algebra_from_json(a, "/algebra");
  std::optional<Representation<double>> rep;
  if (a.is_string()) rep = preset(a.get<std::string>()).representation;
  const auto n = algebra.dim();

  const Matrix<double> iso = columns_of(member(j, "isotropy", ""), "/isotropy", n);
  Matrix<double> comp;
  if (j.contains("complement")) {
    comp = columns_of(j.at("complement"), "/complement", n);
  } else {
    try {
      comp = HomogeneousSpace<double>::default_complement(algebra, iso);
    } catch (const InternalError& e) {
      throw ParseError("/complement", std::string("no default complement: ") + e.what());
    }
  }
  const Eigen::Index d = comp.cols();
  const Matrix<double> gram = rows_of(member(j, "metric", ""), "/metric", d, d);
  std::string label = "space";
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError("/label", "expected a string");
    label = j.at("label").get<std::string>();
  }
  if (j.contains("representation")) {
    const json& r = array(j.at("representation"), "/representation");
    if (static_cast<Eigen::Index>(r.size()) != n) {
      throw ParseError("/representation", "expected one matrix per basis element");
    }
    Representation<double> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto p = child("/representation", i);
      const json& m = array(r[i], p);
      const auto size = static_cast<Eigen::Index>(m.size());
      out.generators.push_back(rows_of(m, p, size, size));
    }
    rep = std::move(out);
  }
  return HomogeneousSpace<double>(std::move(algebra), iso, comp, gram, label, std::move(rep));
}

HomogeneousSpace<double> read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return space_from_json(j);
}

json to_json(const Subspace<double>& s) {
  return {{"dim", s.dim()}, {"basis", matrix_columns(s.basis())}};
}

json to_json(const TransvectionReport<double>& r) {
  return {{"index", r.index},
          {"coindex", r.coindex},
          {"involutive_ok", r.involutive_ok},
          {"scope", TransvectionReport<double>::scope},
          {"p_space", to_json(r.p_space)},
          {"s_space", to_json(r.s_space)},
          {"k_space", to_json(r.k_space)}};
}

json to_json(const BoundReport<double>& b) {
  return {{"g_d", to_json(b.g_d)}, {"g_prime", to_json(b.g_prime)}, {"k", b.k},
          {"lhs", b.lhs},          {"rhs", b.rhs},                  {"bound_holds", b.bound_holds},
          {"equality", b.equality}};
}

json to_json(const JacobiSpectrum<double>& s) {
  json ev = json::array();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) ev.push_back(s.eigenvalues(i));
  json dir = json::array();
  for (Eigen::Index i = 0; i < s.direction.size(); ++i) dir.push_back(s.direction(i));
  return {{"direction", dir},
          {"eigenvalues", ev},
          {"eigenvectors", matrix_columns(s.eigenvectors)},
          {"operator", matrix_rows(s.operator_matrix)},
          {"psd", s.psd}};
}

json to_json(const PolarReport& r) {
  json ev = json::array();
  for (Eigen::Index i = 0; i < r.metric_eigenvalues.size(); ++i) ev.push_back(r.metric_eigenvalues(i));
  return {{"dim_S", r.dim_S},     {"dim_B", r.dim_B},       {"dim_fiber", r.dim_fiber},
          {"coindex_S", r.coindex_S}, {"berger_t", r.berger_t}, {"metric_eigenvalues", ev},
          {"leaf_tangent", to_json(r.leaf_tangent)}};
}

}  // namespace symidx::io
