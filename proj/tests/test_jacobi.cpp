#include "symidx/catalog.hpp"
#include "symidx/geodesic.hpp"
#include "symidx/jacobi.hpp"
#include "symidx/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace symidx;

namespace {

Vector<double> e(Eigen::Index n, Eigen::Index i) { return Vector<double>::Unit(n, i); }

Matrix<double> rotation_generator(std::initializer_list<double> freqs) {
  const auto n = static_cast<Eigen::Index>(2 * freqs.size());
  Matrix<double> m = Matrix<double>::Zero(n, n);
  Eigen::Index b = 0;
  for (double f : freqs) {
    m(b, b + 1) = -f;
    m(b + 1, b) = f;
    b += 2;
  }
  return m;
}

}  // namespace

TEST_CASE("generalized trigonometric functions") {
  CHECK(sin_kappa(4.0, 0.3) == doctest::Approx(std::sin(0.6) / 2.0));
  CHECK(cos_kappa(4.0, 0.3) == doctest::Approx(std::cos(0.6)));
  CHECK(sin_kappa(0.0, 0.3) == 0.3);
  CHECK(cos_kappa(0.0, 0.3) == 1.0);
  CHECK(sin_kappa(-1.0, 0.3) == doctest::Approx(std::sinh(0.3)));
  CHECK(cos_kappa(-1.0, 0.3) == doctest::Approx(std::cosh(0.3)));
}

TEST_CASE("round spheres have spectrum {0, 1, ..., 1}") {
  for (int n = 2; n <= 5; ++n) {
    const auto sp = round_sphere(n);
    const auto r = transvection_space(sp);
    for (Eigen::Index c = 0; c < r.p_space.dim(); ++c) {
      const auto s = jacobi_operator_sym(sp, r.p_space.basis().col(c));
      CHECK(s.psd);
      CHECK(std::abs(s.eigenvalues(0)) < 1e-12);
      for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) CHECK(s.eigenvalues(i) == doctest::Approx(1.0));
      CHECK((s.operator_matrix * s.direction).norm() < 1e-12);
      CHECK(s.direction.dot(s.gram * s.direction) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("Jacobi operator requires a transvection") {
  const auto sp = so4_so2(0.5, 1.0);
  CHECK_THROWS_AS(jacobi_operator_sym(sp, sp.lift(e(5, 2))), PreconditionError);
  CHECK_THROWS_AS(jacobi_operator_sym(sp, sp.isotropy().basis().col(0)), PreconditionError);
  CHECK_THROWS_AS(jacobi_operator_sym(sp, e(3, 0)), InputError);
}

TEST_CASE("SO(4)/SO(2) Jacobi spectrum is PSD with a kernel along v") {
  const auto sp = so4_so2(0.5, 1.0);
  const auto r = transvection_space(sp);
  for (Eigen::Index c = 0; c < r.p_space.dim(); ++c) {
    const auto s = jacobi_operator_sym(sp, r.p_space.basis().col(c));
    CHECK(s.psd);
    CHECK((s.operator_matrix * s.direction).norm() < 1e-12);
  }
}

TEST_CASE("jacobi_field solves J'' = -K J with the given data") {
  std::mt19937 rng(3);
  std::normal_distribution<double> d;
  for (const auto& sp : {so4_so2(0.25, 1.2), cp2(), round_sphere(4)}) {
    CAPTURE(sp.label());
    const auto r = transvection_space(sp);
    const auto s = jacobi_operator_sym(sp, r.p_space.basis().col(0));
    Vector<double> v(sp.dim()), w(sp.dim());
    for (Eigen::Index i = 0; i < sp.dim(); ++i) {
      v(i) = d(rng);
      w(i) = d(rng);
    }
    CHECK((jacobi_field(s, v, w, 0.0) - v).norm() < 1e-12);
    const double h = 1e-4;
    const Vector<double> slope = (jacobi_field(s, v, w, h) - jacobi_field(s, v, w, -h)) / (2 * h);
    CHECK((slope - w).norm() < 1e-6);
    for (double t : {0.4, 1.3, 2.9}) {
      const Vector<double> acc =
          (jacobi_field(s, v, w, t + h) - 2.0 * jacobi_field(s, v, w, t) + jacobi_field(s, v, w, t - h)) / (h * h);
      CHECK((acc + s.operator_matrix * jacobi_field(s, v, w, t)).norm() < 1e-5 * (1.0 + v.norm() + w.norm()));
    }
  }
}

TEST_CASE("primitive period of one-parameter groups") {
  CHECK(primitive_period(rotation_generator({1.0})) == doctest::Approx(2 * EIGEN_PI));
  CHECK(primitive_period(rotation_generator({2.0, 3.0})) == doctest::Approx(2 * EIGEN_PI));
  CHECK(primitive_period(rotation_generator({2.0, 4.0})) == doctest::Approx(EIGEN_PI));
  CHECK(primitive_period(rotation_generator({0.0, 0.5})) == doctest::Approx(4 * EIGEN_PI));
  CHECK_THROWS_AS(primitive_period(rotation_generator({1.0, std::sqrt(2.0)})), NonClosedError);
  CHECK_THROWS_AS(primitive_period(rotation_generator({0.0})), NonClosedError);
  Matrix<double> boost = Matrix<double>::Zero(2, 2);
  boost(0, 1) = boost(1, 0) = 1.0;
  CHECK_THROWS_AS(primitive_period(boost), NonClosedError);
}

TEST_CASE("closed geodesic lengths") {
  const auto s2 = round_sphere(2);
  CHECK(closed_geodesic_length(s2, s2.lift(e(2, 0)), *s2.representation()) == doctest::Approx(2 * EIGEN_PI));
  for (double s : {0.25, 0.5, 0.75}) {
    const auto sp = spin3_metric(s, 2.0 - s, 2.0);
    const auto& rep = *sp.representation();
    CHECK(closed_geodesic_length(sp, e(3, 1), rep) == doctest::Approx(2 * EIGEN_PI * std::sqrt(s)).epsilon(1e-12));
    CHECK(closed_geodesic_length(sp, e(3, 2), rep) ==
          doctest::Approx(2 * EIGEN_PI * std::sqrt(2.0 - s)).epsilon(1e-12));
    CHECK(closed_geodesic_length(sp, e(3, 0), rep) == doctest::Approx(2 * EIGEN_PI * std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(closed_geodesic_length(sp, Vector<double>(e(3, 1) + e(3, 2)), rep), PreconditionError);
  }
}
