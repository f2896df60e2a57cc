#include "symidx/presets.hpp"

#include <doctest.h>

#include <random>

using namespace symidx;

namespace {

Vector<double> e(Eigen::Index n, Eigen::Index i) { return Vector<double>::Unit(n, i); }

Vector<double> random_vector(std::mt19937& rng, Eigen::Index n) {
  std::normal_distribution<double> d;
  Vector<double> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace

TEST_CASE("spin(3) bracket is minus the quaternion commutator") {
  const auto s = spin3_quaternion();
  // basis order (i, j, k); ij - ji = 2k
  CHECK((bracket(s.algebra, e(3, 1), e(3, 0)) - 2.0 * e(3, 2)).norm() < 1e-14);
  CHECK((bracket(s.algebra, e(3, 0), e(3, 1)) + 2.0 * e(3, 2)).norm() < 1e-14);
  const Matrix<double> x = s.representation(e(3, 0)), y = s.representation(e(3, 1));
  const Matrix<double> lhs = s.representation(bracket(s.algebra, e(3, 0), e(3, 1)));
  CHECK((lhs + (x * y - y * x)).norm() < 1e-14);
}

TEST_CASE("positive Killing form on spin(3) and so(3)") {
  const auto b = killing_form_positive(spin3_quaternion().algebra);
  CHECK((b.gram() - 8.0 * Matrix<double>::Identity(3, 3)).norm() < 1e-13);
  const auto so3 = killing_form_positive(so_algebra(3).algebra);
  CHECK((so3.gram() - 2.0 * Matrix<double>::Identity(3, 3)).norm() < 1e-13);
  CHECK(so3.is_positive_definite());
}

TEST_CASE("Jacobi identity and antisymmetry of the presets") {
  for (const auto& name : {"so3", "so4", "spin3_quat", "su3", "so:5", "abelian:3"}) {
    CAPTURE(name);
    const auto alg = preset(name).algebra;
    CHECK(alg.jacobi_residual() < 1e-12);
    CHECK(alg.antisymmetry_residual() < 1e-12);
    CHECK(ad_invariance_residual(alg, killing_form_positive(alg).gram()) < 1e-12);
  }
  CHECK(preset("su3").algebra.dim() == 8);
  CHECK(preset("so:5").algebra.dim() == 10);
  CHECK(preset("so:5").algebra.labels().front() == "E12");
  CHECK_THROWS_AS(preset("sp2"), InputError);
  CHECK_THROWS_AS(preset("so:1"), InputError);
}

TEST_CASE("invalid structure constants are rejected") {
  std::vector<std::vector<std::vector<double>>> c(3, std::vector<std::vector<double>>(3, std::vector<double>(3, 0.0)));
  c[0][1][2] = 1.0;  // [e0, e1] = e2 without [e1, e0] = -e2
  CHECK_THROWS_AS(LieAlgebra<double>::from_structure(c), ConstructionError);
  c[1][0][2] = -1.0;
  c[1][2][1] = 1.0;  // antisymmetric but [e1, e2] = e1, [e2, e1] = -e1 breaks Jacobi
  c[2][1][1] = -1.0;
  CHECK_THROWS_AS(LieAlgebra<double>::from_structure(c), ConstructionError);
  const auto skipped = LieAlgebra<double>::from_structure(c, {}, LieAlgebra<double>::Validation::skip);
  CHECK(skipped.jacobi_residual() > 1e-3);
  CHECK_THROWS_AS(LieAlgebra<double>::from_structure({{{0.0}, {0.0}}}), InputError);
}

TEST_CASE("matrix algebra rejects non-closed spans") {
  Matrix<double> a = Matrix<double>::Zero(3, 3), b = Matrix<double>::Zero(3, 3);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  b(0, 2) = 1.0;
  b(2, 0) = -1.0;
  CHECK_THROWS_AS(matrix_algebra<double>({a, b}), ConstructionError);
  CHECK_THROWS_AS(matrix_algebra<double>({a, a}), ConstructionError);
}

TEST_CASE("center and derived algebra") {
  const auto u2 = direct_sum(spin3_quaternion().algebra, LieAlgebra<double>::abelian(1), "", "z");
  CHECK(u2.dim() == 4);
  CHECK(center(u2).same_as(Subspace<double>::span(e(4, 3))));
  CHECK(derived_algebra(u2).dim() == 3);
  CHECK(center(LieAlgebra<double>::abelian(2)).dim() == 2);
  CHECK(derived_algebra(LieAlgebra<double>::abelian(2)).dim() == 0);
  CHECK(center(preset("su3").algebra).dim() == 0);
}

TEST_CASE("largest invariant subspace finds ideals") {
  const auto so4 = preset("so4").algebra;
  const auto all = Subspace<double>::full(6);
  // E12 alone generates no proper ideal of so(4) inside its span
  const auto h = Subspace<double>::span(e(6, 0));
  CHECK(largest_invariant_subspace(so4, all, h).dim() == 0);
  // a simple factor of spin(3) + spin(3) is its own largest invariant subspace
  const auto sum = direct_sum(spin3_quaternion(), spin3_quaternion(), "L", "R");
  Matrix<double> left = Matrix<double>::Zero(6, 3);
  left.topRows(3).setIdentity();
  const auto l = Subspace<double>::span(left);
  CHECK(largest_invariant_subspace(sum.algebra, Subspace<double>::full(6), l).same_as(l));
}

TEST_CASE("bi-invariant directions of left-invariant metrics") {
  const auto s = spin3_quaternion().algebra;
  CHECK(bi_invariant_directions(s, BilinearForm<double>(Matrix<double>::Identity(3, 3))).dim() == 3);
  const auto berger = bi_invariant_directions(s, BilinearForm<double>(Matrix<double>(Eigen::Vector3d(2, 1, 1).asDiagonal())));
  CHECK(berger.same_as(Subspace<double>::span(e(3, 0))));
  CHECK(bi_invariant_directions(s, BilinearForm<double>(Matrix<double>(Eigen::Vector3d(3, 2, 1).asDiagonal()))).dim() == 0);
}

TEST_CASE("random brackets: antisymmetry, Jacobi, invariance") {
  std::mt19937 rng(20261015);
  for (const auto& name : {"so4", "su3"}) {
    const auto alg = preset(name).algebra;
    const auto b = killing_form_positive(alg);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_vector(rng, alg.dim()), y = random_vector(rng, alg.dim()), z = random_vector(rng, alg.dim());
      const double scale = x.norm() * y.norm() * z.norm() * alg.structure_scale() * alg.structure_scale();
      CHECK((bracket(alg, x, y) + bracket(alg, y, x)).norm() <= 1e-12 * x.norm() * y.norm() * alg.structure_scale());
      const Vector<double> jac = bracket(alg, x, bracket(alg, y, z)) + bracket(alg, y, bracket(alg, z, x)) +
                                 bracket(alg, z, bracket(alg, x, y));
      CHECK(jac.norm() <= 1e-12 * scale);
      const double inv = b(bracket(alg, x, y), z) + b(y, bracket(alg, x, z));
      CHECK(std::abs(inv) <= 1e-11 * scale * b.gram().norm());
    }
  }
}

TEST_CASE("representation is a homomorphism on su(3)") {
  std::mt19937 rng(7);
  const auto su3 = su3_algebra();
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_vector(rng, 8), y = random_vector(rng, 8);
    const Matrix<double> rx = su3.representation(x), ry = su3.representation(y);
    const Matrix<double> lhs = su3.representation(bracket(su3.algebra, x, y));
    CHECK((lhs + (rx * ry - ry * rx)).norm() <= 1e-12 * rx.norm() * ry.norm());
  }
}

TEST_CASE("quaternion helpers") {
  const Vector<double> i = e(4, 1), j = e(4, 2), k = e(4, 3);
  CHECK((quaternion_product(i, j) - k).norm() < 1e-15);
  CHECK((quaternion_product(j, i) + k).norm() < 1e-15);
  CHECK((quaternion_left(i) * j - quaternion_product(i, j)).norm() < 1e-15);
  CHECK((quaternion_right(i) * j - quaternion_product(j, i)).norm() < 1e-15);
}

TEST_CASE("long double instantiation") {
  using L = long double;
  std::vector<Matrix<L>> basis;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    Matrix<L> m = Matrix<L>::Zero(3, 3);
    m(a, b) = 1;
    m(b, a) = -1;
    basis.push_back(m);
  }
  const auto so3 = matrix_algebra<L>(basis);
  CHECK(so3.algebra.jacobi_residual() < L(1e-15));
  CHECK(std::abs(killing_form_positive(so3.algebra).gram()(0, 0) - L(2)) < L(1e-15));
}
