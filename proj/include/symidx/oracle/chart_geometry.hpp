#pragma once

#include "symidx/homogeneous_space.hpp"

#include <vector>

namespace symidx::oracle {

/// Riemannian geometry of a homogeneous space in the exponential chart
/// x -> exp(sum_a x_a rho(M_a)).p, by finite differences. Uses only the
/// matrix representation, the split g = h + m and the Gram matrix; the
/// structure constants are never consulted.
class ChartGeometry {
 public:
  explicit ChartGeometry(const HomogeneousSpace<double>& sp, double step = 2e-3);

  Eigen::Index dim() const { return dim_; }

  /// Metric coefficients g_ab(x).
  Matrix<double> metric(const Vector<double>& x) const;

  /// gamma[l](i, j) = Gamma^l_ij(x).
  std::vector<Matrix<double>> christoffel(const Vector<double>& x) const;

  /// Chart components of the Killing field of X (g-coordinates) at x.
  Vector<double> killing_field(const Vector<double>& x_alg, const Vector<double>& x) const;

  /// (nabla X) at the base point: column a is nabla_{d_a} X.
  Matrix<double> covariant_derivative(const Vector<double>& x_alg) const;

  /// w -> R(w, v) v at the base point, v in m-coordinates.
  Matrix<double> jacobi_operator(const Vector<double>& v) const;

 private:
  Matrix<double> exp_sum(const Vector<double>& x) const;
  Vector<double> algebra_coords(const Matrix<double>& y) const;
  Matrix<double> frame(const Vector<double>& x) const;
  std::vector<Matrix<double>> christoffel_derivative(const Vector<double>& x, Eigen::Index i) const;

  Eigen::Index dim_ = 0;
  double h_ = 2e-3;
  std::vector<Matrix<double>> rep_;
  std::vector<Matrix<double>> chart_gens_;
  Matrix<double> evaluation_;
  Matrix<double> gram_;
  Matrix<double> rep_vec_;
  Eigen::ColPivHouseholderQR<Matrix<double>> rep_qr_;
};

/// Fourth-order Runge-Kutta solution of J'' = -K J, J(0) = v, J'(0) = w.
Vector<double> integrate_jacobi(const Matrix<double>& k, const Vector<double>& v, const Vector<double>& w,
                                double t, int steps);

}  // namespace symidx::oracle
