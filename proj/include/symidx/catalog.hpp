#pragma once

#include "symidx/homogeneous_space.hpp"
#include "symidx/presets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symidx {

/// Round unit sphere S^n = SO(n+1)/SO(n), 2 <= n <= 5, with the metric
/// B / (2(n-1)) on the complement spanned by E_{1,b}.
HomogeneousSpace<double> round_sphere(int n);

/// SO(4)/SO(2) with the metric <.,.>_(lambda, s) on
/// m = p' + R e_1 + V, basis order (p'_1, p'_2, e_1, e_2, e_3):
/// Gram diag(2, 2, s, t, t) against (B, lambda B), t = 2 - s by default.
HomogeneousSpace<double> so4_so2(double lambda, double s, std::optional<double> t = std::nullopt);

/// Non-empty when lambda lies outside (0, 1]; the metric is homothetic to
/// the one with 1/lambda.
std::optional<std::string> so4_so2_warning(double lambda);

/// The element (Z, -Z/lambda) of so(3) + so(3), Z in spin(3) coordinates.
Vector<double> m_lambda_vector(double lambda, const Vector<double>& z);
Subspace<double> m_lambda(double lambda);

/// Spin(3) with the left-invariant metric of eigenvalues (a1, a2, a3) on
/// the quaternion directions (j, k, i).
HomogeneousSpace<double> spin3_metric(double a1, double a2, double a3);

/// S^2 of radius rho times the unit S^3 under (g, h)(q, k) = (g q g^-1, g k h^-1),
/// base point (rho i, i), with the numbers read off the computed geometry.
struct ProductOfSpheres {
  HomogeneousSpace<double> space;
  double expected_lambda = 0;
  double expected_s = 0;
  double expected_t = 0;
  double computed_lambda = 0;
  double s_prime = 0;  // |xi.p|^2 / |xi|^2_(B, lambda B) on the isotropy-fixed line
  double t_prime = 0;  // the same on a perpendicular vector
  double computed_s = 0;
  double computed_t = 0;
  Subspace<double> perpendicular{};  // perpendicular Killing fields
};
ProductOfSpheres product_of_spheres(double rho);

/// How an algebra acts on the ambient vector space of an orbit.
enum class OrbitAction {
  conjugation,  // X . P = rho(X) P - P rho(X)
  linear        // X . v = rho(X) v
};

/// Orbit of `point` with the metric induced by scale * tr(A^T B) on the
/// ambient matrices (or scale * <a, b> on vectors).
HomogeneousSpace<double> orbit_space(const MatrixAlgebra<double>& amb, const Matrix<double>& point,
                                     OrbitAction action, double scale, const std::string& label);

/// Homogeneous space from a linear evaluation map g -> R^N and an inner
/// product on R^N: h = ker, m = invariant complement, Gram pulled back.
HomogeneousSpace<double> from_evaluation(const LieAlgebra<double>& algebra, const Matrix<double>& eval,
                                         const Matrix<double>& inner, const std::string& label,
                                         std::optional<Representation<double>> rep = std::nullopt);

/// CP^2 as the su(3)-orbit of diag(1, 0, 0), metric 1/2 Re tr(AB).
HomogeneousSpace<double> cp2();

struct PolarReport {
  Eigen::Index dim_S = 0;
  Eigen::Index dim_B = 0;
  Eigen::Index dim_fiber = 0;
  Eigen::Index coindex_S = 0;
  double berger_t = 0;
  Vector<double> metric_eigenvalues;  // against B on [k, k], normalized to (t, t, 2)
  Subspace<double> leaf_tangent;      // K^+ . p inside m
};

struct Centriole {
  HomogeneousSpace<double> space;
  PolarReport report;
};

/// The distance sphere S = K . p in CP^2, K = S(U(1) x U(2)), p the midpoint
/// between o = [e_1] and the polar point q = [e_2].
Centriole cp2_centriole();

/// The complex 3 x 3 basis of s(u(1) + u(2)) and the three points used above.
struct Cp2Data {
  std::vector<Eigen::MatrixXcd> k_basis;
  Eigen::MatrixXcd o, p, q;
};
Cp2Data cp2_data();

/// Catalog names for `emit`: "round-sphere:n", "so4-so2:lambda,s[,t]",
/// "spin3:a1,a2,a3", "product-spheres:rho", "cp2", "cp2-centriole".
HomogeneousSpace<double> catalog_space(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace symidx
