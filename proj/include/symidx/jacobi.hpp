#pragma once

#include "symidx/homogeneous_space.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace symidx {

/// Jacobi operator w -> R(w, v) v along a transvection, v of unit length.
template <typename Scalar>
struct JacobiSpectrum {
  Vector<Scalar> direction;     // v in m-coordinates, |v| = 1
  Vector<Scalar> eigenvalues;   // ascending
  Matrix<Scalar> eigenvectors;  // metric-orthonormal columns
  Matrix<Scalar> operator_matrix;
  Matrix<Scalar> gram;
  bool psd = false;
};

/// sin_kappa(t): sin(sqrt(k) t)/sqrt(k), t, or sinh(sqrt(-k) t)/sqrt(-k).
template <typename Scalar>
Scalar sin_kappa(Scalar kappa, Scalar t) {
  using std::sin;
  using std::sinh;
  using std::sqrt;
  if (kappa > Scalar(0)) return sin(sqrt(kappa) * t) / sqrt(kappa);
  if (kappa < Scalar(0)) return sinh(sqrt(-kappa) * t) / sqrt(-kappa);
  return t;
}

template <typename Scalar>
Scalar cos_kappa(Scalar kappa, Scalar t) {
  using std::cos;
  using std::cosh;
  using std::sqrt;
  if (kappa > Scalar(0)) return cos(sqrt(kappa) * t);
  if (kappa < Scalar(0)) return cosh(sqrt(-kappa) * t);
  return Scalar(1);
}

/// Jacobi operator in the direction of a transvection X, from
/// [X,[X,xi]] = -R(xi, v) v along the geodesic exp(tX).p. The direction is
/// rescaled to unit length first.
template <typename Scalar, typename Derived>
JacobiSpectrum<Scalar> jacobi_operator_sym(const HomogeneousSpace<Scalar>& sp,
                                           const Eigen::MatrixBase<Derived>& x,
                                           const Tolerances<Scalar>& tol = {}) {
  using std::sqrt;
  const auto& alg = sp.algebra();
  if (x.size() != alg.dim()) throw InputError("jacobi_operator_sym: vector length does not match algebra");
  const Matrix<Scalar>& g = sp.metric().gram();
  const Matrix<Scalar>& e = sp.evaluation();
  const Matrix<Scalar>& m = sp.complement();

  const Matrix<Scalar> ad_x = adjoint(alg, x);
  const Scalar nabla = nabla_at_base(sp, x).norm();
  const Scalar scale = (e * ad_x * m).norm();
  if (nabla > tol.residual * std::max(scale, Scalar(1e-300))) {
    std::ostringstream os;
    os << "jacobi_operator_sym: X is not a transvection (|nabla X| = " << nabla << ")";
    throw PreconditionError(os.str());
  }
  const Vector<Scalar> v = e * x;
  const Scalar len = sqrt(v.dot(g * v));
  if (!(len > Scalar(0))) throw PreconditionError("jacobi_operator_sym: X vanishes at the base point");
  const Matrix<Scalar> ad_unit = ad_x / len;

  JacobiSpectrum<Scalar> s;
  s.direction = v / len;
  s.gram = g;
  s.operator_matrix = -(e * ad_unit * ad_unit * m);

  const Matrix<Scalar> gj = g * s.operator_matrix;
  const Scalar asym = (gj - gj.transpose()).norm();
  if (asym > tol.symmetry * std::max(gj.norm(), Scalar(1))) {
    std::ostringstream os;
    os << "jacobi_operator_sym: operator is not metric-symmetric (residual " << asym << ")";
    throw InternalError(os.str());
  }
  const Matrix<Scalar> sym = (gj + gj.transpose()) / Scalar(2);
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<Scalar>> es(sym, g);
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();
  const Scalar spread = std::max(s.eigenvalues.cwiseAbs().maxCoeff(), Scalar(1));
  s.psd = s.eigenvalues(0) >= -tol.psd * spread;
  return s;
}

/// J(t) with J(0) = v, J'(0) = w, written in the parallel eigenframe
/// (m-coordinates of the frame at t = 0).
template <typename Scalar, typename DV, typename DW>
Vector<Scalar> jacobi_field(const JacobiSpectrum<Scalar>& spec, const Eigen::MatrixBase<DV>& v,
                            const Eigen::MatrixBase<DW>& w, Scalar t) {
  const Eigen::Index d = spec.eigenvalues.size();
  if (v.size() != d || w.size() != d) throw InputError("jacobi_field: vector length does not match dim(m)");
  const Vector<Scalar> vc = spec.eigenvectors.transpose() * (spec.gram * v);
  const Vector<Scalar> wc = spec.eigenvectors.transpose() * (spec.gram * w);
  Vector<Scalar> coeff(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Scalar a = spec.eigenvalues(i);
    coeff(i) = vc(i) * cos_kappa(a, t) + wc(i) * sin_kappa(a, t);
  }
  return spec.eigenvectors * coeff;
}

}  // namespace symidx
