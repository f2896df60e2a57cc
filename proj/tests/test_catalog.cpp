#include "symidx/catalog.hpp"
#include "symidx/jacobi.hpp"
#include "symidx/oracle/chart_geometry.hpp"
#include "symidx/symmetry.hpp"

#include <doctest.h>

using namespace symidx;

namespace {

Vector<double> e(Eigen::Index n, Eigen::Index i) { return Vector<double>::Unit(n, i); }

}  // namespace

TEST_CASE("round spheres are unit spheres") {
  for (int n = 2; n <= 5; ++n) {
    const auto sp = round_sphere(n);
    CHECK(sp.dim() == n);
    CHECK(sp.algebra().dim() == n * (n + 1) / 2);
    CHECK((sp.metric().gram() - Matrix<double>::Identity(n, n)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(round_sphere(1), InputError);
  CHECK_THROWS_AS(round_sphere(6), InputError);
}

TEST_CASE("SO(4)/SO(2) family parameters") {
  const auto sp = so4_so2(0.5, 1.2);
  CHECK(sp.dim() == 5);
  CHECK(sp.isotropy().dim() == 1);
  const Vector<double> diag = sp.metric().gram().diagonal();
  CHECK((diag - (Vector<double>(5) << 2.0, 2.0, 1.2, 0.8, 0.8).finished()).norm() < 1e-12);
  CHECK(so4_so2(0.5, 1.2, 0.3).metric().gram()(4, 4) == doctest::Approx(0.3));
  CHECK(sp.label() == "so4-so2:0.5,1.2");
  CHECK_THROWS_AS(so4_so2(0.0, 1.0), InputError);
  CHECK_THROWS_AS(so4_so2(0.5, 2.0), InputError);
  CHECK_THROWS_AS(so4_so2(0.5, 1.0, -1.0), InputError);
  CHECK(so4_so2_warning(2.0).has_value());
  CHECK_FALSE(so4_so2_warning(0.5).has_value());
  CHECK(transvection_space(so4_so2(2.0, 1.0)).index == 2);
  // the m^lambda vectors are B-orthogonal to the first factor's complement
  CHECK(m_lambda(0.5).dim() == 3);
}

TEST_CASE("Spin(3) metric eigenvalues") {
  const auto sp = spin3_metric(0.5, 1.5, 2.0);
  CHECK(sp.isotropy().dim() == 0);
  const Vector<double> diag = sp.metric().gram().diagonal();
  CHECK((diag - Eigen::Vector3d(2.0, 0.5, 1.5)).norm() < 1e-15);
  CHECK(sp.representation().has_value());
  CHECK_THROWS_AS(spin3_metric(0.0, 1.0, 1.0), InputError);
}

TEST_CASE("product of spheres reproduces the (lambda, s, t) formulas") {
  for (double rho : {0.5, 1.0, 2.0}) {
    CAPTURE(rho);
    const auto ps = product_of_spheres(rho);
    const double r2 = rho * rho;
    CHECK(ps.space.dim() == 5);
    CHECK(ps.computed_lambda == doctest::Approx(1.0 / (1.0 + 2.0 * r2)).epsilon(1e-12));
    CHECK(ps.computed_s == doctest::Approx(2.0 * (1.0 + r2) / (1.0 + 2.0 * r2)).epsilon(1e-12));
    CHECK(ps.computed_t == doctest::Approx(2.0 * r2 / (1.0 + 2.0 * r2)).epsilon(1e-12));
    CHECK(ps.s_prime == doctest::Approx(0.25 * (1.0 + r2)).epsilon(1e-12));
    CHECK(ps.t_prime == doctest::Approx(0.25 * r2).epsilon(1e-12));
    CHECK(ps.perpendicular.same_as(m_lambda(ps.expected_lambda), 1e-9));
    CHECK(transvection_space(ps.space).index == 2);
  }
  CHECK_THROWS_AS(product_of_spheres(0.0), InputError);
}

TEST_CASE("orbits: the unit sphere in R^3") {
  const auto so3 = so_algebra(3);
  const auto sp = orbit_space(so3, Matrix<double>(e(3, 0)), OrbitAction::linear, 1.0, "S2");
  CHECK(sp.dim() == 2);
  CHECK(transvection_space(sp).index == 2);
  CHECK_THROWS_AS(orbit_space(so3, Matrix<double>(e(4, 0)), OrbitAction::linear, 1.0, "x"), InputError);
  CHECK_THROWS_AS(orbit_space(so3, Matrix<double>(e(3, 0)), OrbitAction::linear, 0.0, "x"), InputError);
}

TEST_CASE("CP^2 and its centriole") {
  const auto p = cp2();
  CHECK(p.dim() == 4);
  CHECK(p.isotropy().dim() == 4);
  const auto r = transvection_space(p);
  CHECK(r.index == 4);
  // holomorphic sectional curvature 4 times the minimum: spectrum {0, 1, 1, 4} up to scale
  const auto s = jacobi_operator_sym(p, r.p_space.basis().col(0));
  const double top = s.eigenvalues(3);
  CHECK(s.eigenvalues(1) == doctest::Approx(top / 4.0));
  CHECK(s.eigenvalues(2) == doctest::Approx(top / 4.0));

  const auto c = cp2_centriole();
  CHECK(c.space.dim() == 3);
  CHECK(c.report.dim_B == 2);
  CHECK(c.report.dim_fiber == 1);
  CHECK(c.report.coindex_S == 2);
  CHECK(c.report.berger_t == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(c.report.leaf_tangent.same_as(transvection_space(c.space).s_space));
  const auto d = cp2_data();
  CHECK(d.k_basis.size() == 4);
  CHECK(std::abs(d.p.trace() - 1.0) < 1e-14);
  CHECK((d.p * d.p - d.p).norm() < 1e-14);
}

TEST_CASE("catalog names") {
  CHECK(catalog_space("round-sphere:3").dim() == 3);
  CHECK(catalog_space("so4-so2:0.5,1").label() == "so4-so2:0.5,1");
  CHECK(catalog_space("so4-so2:0.5,1,0.7").metric().gram()(3, 3) == doctest::Approx(0.7));
  CHECK(catalog_space("spin3:1,1,2").dim() == 3);
  CHECK(catalog_space("product-spheres:1").dim() == 5);
  CHECK(catalog_space("cp2-centriole").dim() == 3);
  CHECK(catalog_space("cp2").dim() == 4);
  CHECK_THROWS_AS(catalog_space("torus:2"), InputError);
  CHECK_THROWS_AS(catalog_space("round-sphere:2.5"), InputError);
  CHECK_THROWS_AS(catalog_space("spin3:1,2"), InputError);
  CHECK_THROWS_AS(catalog_space("so4-so2:a,1"), InputError);
  CHECK(catalog_names().size() == 6);
}

TEST_CASE("chart oracle: metric and Killing fields at the base point") {
  const auto sp = so4_so2(0.5, 1.0, 0.7);
  const oracle::ChartGeometry chart(sp);
  const Vector<double> zero = Vector<double>::Zero(sp.dim());
  CHECK((chart.metric(zero) - sp.metric().gram()).norm() < 1e-10);
  for (Eigen::Index a = 0; a < sp.algebra().dim(); ++a) {
    const Vector<double> x = e(sp.algebra().dim(), a);
    CHECK((chart.killing_field(x, zero) - sp.evaluate(x)).norm() < 1e-10);
  }
}

TEST_CASE("chart oracle agrees with the bracket formulas") {
  for (const auto& sp : {spin3_metric(0.3, 1.1, 2.0), so4_so2(0.25, 0.5, 0.7), cp2(), product_of_spheres(2.0).space}) {
    CAPTURE(sp.label());
    const oracle::ChartGeometry chart(sp);
    for (Eigen::Index a = 0; a < sp.algebra().dim(); ++a) {
      const Vector<double> x = e(sp.algebra().dim(), a);
      const Matrix<double> n = nabla_at_base(sp, x);
      CHECK((chart.covariant_derivative(x) - n).norm() <= 1e-7 * std::max(1.0, n.norm()));
    }
    const auto r = transvection_space(sp);
    if (r.p_space.dim() > 0) {
      const auto s = jacobi_operator_sym(sp, r.p_space.basis().col(0));
      CHECK((chart.jacobi_operator(s.direction) - s.operator_matrix).norm() <= 1e-6 * std::max(1.0, s.operator_matrix.norm()));
    }
  }
}

TEST_CASE("round S^2 has curvature one in the chart") {
  const auto sp = round_sphere(2);
  const oracle::ChartGeometry chart(sp);
  const Matrix<double> k = chart.jacobi_operator(e(2, 0));
  CHECK(k(1, 1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(k(0, 0)) < 1e-8);
}

TEST_CASE("RK4 Jacobi integration") {
  const Matrix<double> k = Eigen::Vector2d(1.0, 4.0).asDiagonal();
  const Vector<double> j = oracle::integrate_jacobi(k, Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(0.0, 2.0), 1.0, 1000);
  CHECK(j(0) == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
  CHECK(j(1) == doctest::Approx(std::sin(2.0)).epsilon(1e-10));
}
