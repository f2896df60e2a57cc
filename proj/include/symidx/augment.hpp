#pragma once

#include "symidx/homogeneous_space.hpp"

#include <string>
#include <vector>

namespace symidx {

/// For a Lie group with a left-invariant metric, adjoins the left-invariant
/// fields that are also Killing. The new algebra is g + a with the fields of
/// a written in a-coordinates; their bracket is minus the bracket of g.
/// The isotropy becomes {(A y, -y)} and the metric is unchanged.
template <typename Scalar>
HomogeneousSpace<Scalar> augment_left_invariant(const HomogeneousSpace<Scalar>& sp,
                                                const Tolerances<Scalar>& tol = {}) {
  const auto& g = sp.algebra();
  const auto n = g.dim();
  if (sp.isotropy().dim() != 0 || sp.dim() != n) {
    throw PreconditionError("augment_left_invariant: space must be a Lie group (trivial isotropy)");
  }
  const Matrix<Scalar>& e = sp.evaluation();
  const BilinearForm<Scalar> on_g(Matrix<Scalar>(e.transpose() * sp.metric().gram() * e));
  const Matrix<Scalar> a = bi_invariant_directions(g, on_g, tol.rank).basis();
  const auto r = a.cols();
  if (r == 0) return sp;

  const Matrix<Scalar> a_pinv = a.transpose();  // orthonormal columns
  std::vector<Matrix<Scalar>> ad;
  std::vector<std::string> labels = g.labels();
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n + r, n + r);
    m.topLeftCorner(n, n) = g.ad(i);
    ad.push_back(std::move(m));
  }
  for (Eigen::Index c = 0; c < r; ++c) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n + r, n + r);
    m.bottomRightCorner(r, r) = -a_pinv * adjoint(g, a.col(c)) * a;
    ad.push_back(std::move(m));
    labels.push_back("hat" + std::to_string(c));
  }
  auto algebra = LieAlgebra<Scalar>::from_adjoints(std::move(ad), std::move(labels));

  Matrix<Scalar> iso(n + r, r);
  iso << a, -Matrix<Scalar>::Identity(r, r);
  Matrix<Scalar> comp = Matrix<Scalar>::Zero(n + r, n);
  comp.topRows(n) = sp.complement();

  std::optional<Representation<Scalar>> rep;
  if (sp.representation()) {
    const auto& rg = *sp.representation();
    const auto d = rg.size();
    Representation<Scalar> out;
    for (Eigen::Index i = 0; i < n; ++i) {
      Matrix<Scalar> m = Matrix<Scalar>::Zero(2 * d, 2 * d);
      m.topLeftCorner(d, d) = rg.generators[static_cast<std::size_t>(i)];
      out.generators.push_back(std::move(m));
    }
    // transposition turns -[.,.] into the opposite bracket
    for (Eigen::Index c = 0; c < r; ++c) {
      Matrix<Scalar> m = Matrix<Scalar>::Zero(2 * d, 2 * d);
      m.bottomRightCorner(d, d) = rg(a.col(c)).transpose();
      out.generators.push_back(std::move(m));
    }
    rep = std::move(out);
  }
  typename HomogeneousSpace<Scalar>::Options opts;
  opts.tol = tol;
  return HomogeneousSpace<Scalar>(std::move(algebra), iso, comp, sp.metric().gram(),
                                  sp.label() + "+augmented", std::move(rep), opts);
}

}  // namespace symidx
