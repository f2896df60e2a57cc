#include "symidx/presets.hpp"

#include <complex>
#include <stdexcept>

namespace symidx {

namespace {

using CMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

int parse_count(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError("preset '" + name + "': expected an integer parameter");
  }
  if (used != text.size()) throw InputError("preset '" + name + "': expected an integer parameter");
  return n;
}

}  // namespace

Matrix<double> quaternion_left(const Vector<double>& q) {
  if (q.size() != 4) throw InputError("quaternion_left: expected 4 components");
  const double a = q(0), b = q(1), c = q(2), d = q(3);
  Matrix<double> m(4, 4);
  m << a, -b, -c, -d,
       b, a, -d, c,
       c, d, a, -b,
       d, -c, b, a;
  return m;
}

Matrix<double> quaternion_right(const Vector<double>& q) {
  if (q.size() != 4) throw InputError("quaternion_right: expected 4 components");
  const double a = q(0), b = q(1), c = q(2), d = q(3);
  Matrix<double> m(4, 4);
  m << a, -b, -c, -d,
       b, a, d, -c,
       c, -d, a, b,
       d, c, -b, a;
  return m;
}

Vector<double> quaternion_product(const Vector<double>& a, const Vector<double>& b) {
  return quaternion_left(a) * b;
}

MatrixAlgebra<double> so_algebra(int n) {
  if (n < 2) throw InputError("so(n) needs n >= 2");
  std::vector<Matrix<double>> basis;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Matrix<double> e = Matrix<double>::Zero(n, n);
      e(a, b) = 1.0;
      e(b, a) = -1.0;
      basis.push_back(e);
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  return matrix_algebra<double>(basis, labels);
}

MatrixAlgebra<double> spin3_quaternion() {
  std::vector<Matrix<double>> basis;
  for (int u = 1; u <= 3; ++u) basis.push_back(quaternion_left(Vector<double>::Unit(4, u)));
  return matrix_algebra<double>(basis, {"i", "j", "k"});
}

MatrixAlgebra<double> su3_algebra() {
  const std::complex<double> I(0.0, 1.0);
  std::vector<CMatrix> gm(8, CMatrix::Zero(3, 3));
  gm[0](0, 1) = gm[0](1, 0) = 1.0;
  gm[1](0, 1) = -I;
  gm[1](1, 0) = I;
  gm[2](0, 0) = 1.0;
  gm[2](1, 1) = -1.0;
  gm[3](0, 2) = gm[3](2, 0) = 1.0;
  gm[4](0, 2) = -I;
  gm[4](2, 0) = I;
  gm[5](1, 2) = gm[5](2, 1) = 1.0;
  gm[6](1, 2) = -I;
  gm[6](2, 1) = I;
  gm[7](0, 0) = gm[7](1, 1) = 1.0 / std::sqrt(3.0);
  gm[7](2, 2) = -2.0 / std::sqrt(3.0);
  std::vector<CMatrix> basis;
  std::vector<std::string> labels;
  for (int a = 0; a < 8; ++a) {
    basis.push_back(I * gm[static_cast<std::size_t>(a)]);
    labels.push_back("iL" + std::to_string(a + 1));
  }
  return matrix_algebra<double>(basis, labels);
}

MatrixAlgebra<double> direct_sum(const MatrixAlgebra<double>& a, const MatrixAlgebra<double>& b,
                                 const std::string& prefix_a, const std::string& prefix_b) {
  const auto ra = a.representation.size();
  const auto rb = b.representation.size();
  Representation<double> rep;
  for (const auto& g : a.representation.generators) {
    Matrix<double> m = Matrix<double>::Zero(ra + rb, ra + rb);
    m.topLeftCorner(ra, ra) = g;
    rep.generators.push_back(std::move(m));
  }
  for (const auto& g : b.representation.generators) {
    Matrix<double> m = Matrix<double>::Zero(ra + rb, ra + rb);
    m.bottomRightCorner(rb, rb) = g;
    rep.generators.push_back(std::move(m));
  }
  return {symidx::direct_sum(a.algebra, b.algebra, prefix_a, prefix_b), std::move(rep)};
}

Preset preset(const std::string& name) {
  if (name == "so3") {
    auto m = so_algebra(3);
    return {m.algebra, m.representation};
  }
  if (name == "so4") {
    const auto so3 = so_algebra(3);
    auto m = direct_sum(so3, so3, "a.", "b.");
    return {m.algebra, m.representation};
  }
  if (name == "spin3_quat") {
    auto m = spin3_quaternion();
    return {m.algebra, m.representation};
  }
  if (name == "su3") {
    auto m = su3_algebra();
    return {m.algebra, m.representation};
  }
  if (name.rfind("abelian:", 0) == 0) {
    const int n = parse_count(name.substr(8), name);
    if (n < 1) throw InputError("preset 'abelian:<n>' needs n >= 1");
    return {LieAlgebra<double>::abelian(n), std::nullopt};
  }
  if (name.rfind("so:", 0) == 0) {
    const int n = parse_count(name.substr(3), name);
    auto m = so_algebra(n);
    return {m.algebra, m.representation};
  }
  throw InputError("unknown algebra preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"so3", "so4", "spin3_quat", "su3", "abelian:<n>", "so:<n>"};
}

}  // namespace symidx
