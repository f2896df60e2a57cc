#pragma once

#include "symidx/homogeneous_space.hpp"

#include <string>

namespace symidx {

/// Transvections at the base point, relative to the presentation algebra.
template <typename Scalar>
struct TransvectionReport {
  Subspace<Scalar> p_space;  // transvections: (nabla X)_p = 0, inside g
  Subspace<Scalar> s_space;  // their values at p, inside m
  Subspace<Scalar> k_space;  // span of brackets of transvections, inside g
  Eigen::Index index = 0;
  Eigen::Index coindex = 0;
  bool involutive_ok = false;
  // The Cartan subspace is computed inside the supplied algebra only; it
  // equals the true one when the algebra is the full isometry algebra.
  static constexpr const char* scope = "relative-to-supplied-algebra";
};

/// Matrix of X -> vec(nabla_at_base(X)), of size dim(m)^2 x dim(g).
template <typename Scalar>
Matrix<Scalar> transvection_system(const HomogeneousSpace<Scalar>& sp) {
  const auto n = sp.algebra().dim();
  const auto d = sp.dim();
  Matrix<Scalar> system(d * d, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    system.col(i) = nabla_at_base(sp, Vector<Scalar>::Unit(n, i)).reshaped();
  }
  return system;
}

/// Largest relative residual of [k, p] in p and [k, k] in k.
template <typename Scalar>
Scalar involutive_residual(const HomogeneousSpace<Scalar>& sp, const TransvectionReport<Scalar>& r) {
  Scalar worst(0);
  const Matrix<Scalar>& k = r.k_space.basis();
  for (Eigen::Index a = 0; a < k.cols(); ++a) {
    const Matrix<Scalar> ad_k = adjoint(sp.algebra(), k.col(a));
    worst = std::max(worst, r.p_space.residual_outside(ad_k * r.p_space.basis()));
    worst = std::max(worst, r.k_space.residual_outside(ad_k * k));
  }
  return worst;
}

template <typename Scalar>
TransvectionReport<Scalar> transvection_space(const HomogeneousSpace<Scalar>& sp,
                                              const Tolerances<Scalar>& tol = {}) {
  const auto& alg = sp.algebra();
  const auto n = alg.dim();
  TransvectionReport<Scalar> r;
  r.p_space = Subspace<Scalar>::from_orthonormal(kernel_basis(transvection_system(sp), tol.rank));
  const Matrix<Scalar>& p = r.p_space.basis();
  r.s_space = Subspace<Scalar>::span(Matrix<Scalar>(sp.evaluation() * p), tol.rank);

  Matrix<Scalar> brackets(n, p.cols() * p.cols());
  Eigen::Index c = 0;
  for (Eigen::Index a = 0; a < p.cols(); ++a)
    for (Eigen::Index b = 0; b < p.cols(); ++b) brackets.col(c++) = bracket(alg, p.col(a), p.col(b));
  // p has orthonormal columns, so brackets are bounded by the structure scale
  const Scalar scale = alg.structure_scale() * Scalar(n);
  r.k_space = brackets.cols() ? Subspace<Scalar>::span(brackets, tol.rank, scale)
                              : Subspace<Scalar>::zero(n);

  r.involutive_ok = involutive_residual(sp, r) <= tol.residual * Scalar(10);
  r.index = r.s_space.dim();
  r.coindex = sp.dim() - r.index;
  return r;
}

/// Decomposition g = g^D + g' where g^D is the ideal of Killing fields
/// tangent to the distribution of symmetry, with the bound 2 dim g' <= k(k+1).
template <typename Scalar>
struct BoundReport {
  Subspace<Scalar> g_d;
  Subspace<Scalar> g_prime;
  Eigen::Index k = 0;
  Eigen::Index lhs = 0;  // 2 dim g'
  Eigen::Index rhs = 0;  // k (k + 1)
  bool bound_holds = false;
  // lhs == rhs with k >= 2, where the bound is sharp.
  bool equality = false;
};

template <typename Scalar>
BoundReport<Scalar> symmetry_ideal(const HomogeneousSpace<Scalar>& sp,
                                   const TransvectionReport<Scalar>& report,
                                   const Tolerances<Scalar>& tol = {}) {
  const auto& alg = sp.algebra();
  const auto n = alg.dim();
  // {X : Ev X in s} = h + lift(s)
  const auto lies_on = sp.isotropy().sum(
      Subspace<Scalar>::span(Matrix<Scalar>(sp.complement() * report.s_space.basis()), tol.rank),
      tol.rank);

  BoundReport<Scalar> b;
  b.g_d = largest_invariant_subspace(alg, Subspace<Scalar>::full(n), lies_on, tol.rank);

  if (b.g_d.dim() == 0) {
    b.g_prime = Subspace<Scalar>::full(n);
  } else {
    const BilinearForm<Scalar> inner = invariant_inner_product(alg, tol.rank);
    b.g_prime = Subspace<Scalar>::from_orthonormal(
        kernel_basis(Matrix<Scalar>(b.g_d.basis().transpose() * inner.gram()), tol.rank));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar r = b.g_prime.residual_outside(alg.ad(i) * b.g_prime.basis());
    if (r > tol.residual * Scalar(10)) {
      throw InternalError("symmetry_ideal: complement of g^D is not an ideal");
    }
  }
  b.k = report.coindex;
  b.lhs = 2 * b.g_prime.dim();
  b.rhs = b.k * (b.k + 1);
  b.bound_holds = b.lhs <= b.rhs;
  b.equality = b.k >= 2 && b.lhs == b.rhs;
  return b;
}

/// Killing fields that stay perpendicular to the leaf of symmetry: the
/// largest (k + p)-invariant subspace of {xi : <Ev xi, s> = 0}.
template <typename Scalar>
Subspace<Scalar> perpendicular_killing_space(const HomogeneousSpace<Scalar>& sp,
                                             const TransvectionReport<Scalar>& report,
                                             const Tolerances<Scalar>& tol = {}) {
  const auto n = sp.algebra().dim();
  const Matrix<Scalar> constraint =
      report.s_space.basis().transpose() * sp.metric().gram() * sp.evaluation();
  const auto perpendicular =
      constraint.rows() == 0
          ? Subspace<Scalar>::full(n)
          : Subspace<Scalar>::from_orthonormal(kernel_basis(constraint, tol.rank));
  const auto generators = report.k_space.sum(report.p_space, tol.rank);
  return largest_invariant_subspace(sp.algebra(), generators, perpendicular, tol.rank);
}

}  // namespace symidx
