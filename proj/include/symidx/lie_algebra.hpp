#pragma once

#include "symidx/numeric.hpp"
#include "symidx/subspace.hpp"

#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace symidx {

/// Brackets follow the orientation of Killing fields induced by a left
/// action: the bracket of X and Y is minus the matrix commutator XY - YX.
enum class BracketConvention { killing_field };

/// Real matrix representation of an algebra, one matrix per basis element.
/// Complex matrices are stored realified: a + ib -> [[a, -b], [b, a]].
template <typename Scalar>
struct Representation {
  std::vector<Matrix<Scalar>> generators;

  Eigen::Index size() const {
    return generators.empty() ? 0 : generators.front().rows();
  }

  template <typename Derived>
  Matrix<Scalar> operator()(const Eigen::MatrixBase<Derived>& x) const {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(size(), size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      out += x(static_cast<Eigen::Index>(i)) * generators[i];
    }
    return out;
  }
};

template <typename Scalar>
Matrix<Scalar> realify(const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>& z) {
  const Eigen::Index n = z.rows();
  Matrix<Scalar> r(2 * n, 2 * z.cols());
  r << z.real(), -z.imag(), z.imag(), z.real();
  return r;
}

/// Finite-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k in the Killing-field convention.
///
/// Stored as the adjoint matrices ad(e_i), column j holding [e_i, e_j].
template <typename Scalar>
class LieAlgebra {
 public:
  static constexpr BracketConvention convention = BracketConvention::killing_field;

  enum class Validation { check, skip };

  LieAlgebra() = default;

  /// `structure[i][j][k]` = c[i][j][k].
  static LieAlgebra from_structure(
      const std::vector<std::vector<std::vector<Scalar>>>& structure,
      std::vector<std::string> labels = {}, Validation v = Validation::check) {
    const auto n = static_cast<Eigen::Index>(structure.size());
    std::vector<Matrix<Scalar>> ad(static_cast<std::size_t>(n), Matrix<Scalar>::Zero(n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& ci = structure[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(ci.size()) != n) {
        throw InputError("structure tensor must be n x n x n");
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& cij = ci[static_cast<std::size_t>(j)];
        if (static_cast<Eigen::Index>(cij.size()) != n) {
          throw InputError("structure tensor must be n x n x n");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          ad[static_cast<std::size_t>(i)](k, j) = cij[static_cast<std::size_t>(k)];
        }
      }
    }
    return from_adjoints(std::move(ad), std::move(labels), v);
  }

  static LieAlgebra from_adjoints(std::vector<Matrix<Scalar>> ad,
                                  std::vector<std::string> labels = {},
                                  Validation v = Validation::check) {
    LieAlgebra a;
    a.ad_ = std::move(ad);
    const auto n = a.dim();
    for (const auto& m : a.ad_) {
      if (m.rows() != n || m.cols() != n) throw InputError("adjoint matrices must be n x n");
    }
    if (labels.empty()) {
      for (Eigen::Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    if (static_cast<Eigen::Index>(labels.size()) != n) {
      throw InputError("label count does not match dimension");
    }
    a.labels_ = std::move(labels);
    if (v == Validation::check) a.validate();
    return a;
  }

  static LieAlgebra abelian(Eigen::Index n) {
    return from_adjoints(std::vector<Matrix<Scalar>>(static_cast<std::size_t>(n),
                                                     Matrix<Scalar>::Zero(n, n)));
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(ad_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// ad(e_i).
  const Matrix<Scalar>& ad(Eigen::Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  /// c[i][j][k].
  Scalar structure(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return ad_[static_cast<std::size_t>(i)](k, j);
  }

  Scalar structure_scale() const {
    Scalar s(0);
    for (const auto& m : ad_) s = std::max(s, m.cwiseAbs().maxCoeff());
    return s;
  }

  /// max |c[i][j][k] + c[j][i][k]|, relative to the largest constant.
  Scalar antisymmetry_residual() const {
    Scalar worst(0);
    const auto n = dim();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
          worst = std::max(worst, Scalar(std::abs(structure(i, j, k) + structure(j, i, k))));
    return detail::relative_residual(worst, structure_scale());
  }

  /// max over basis triples of |[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]|,
  /// relative to the square of the largest structure constant.
  Scalar jacobi_residual() const {
    const auto n = dim();
    Scalar worst(0);
    // [ad_i, ad_j] = ad_[e_i, e_j] is equivalent to the Jacobi identity.
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Matrix<Scalar> lhs = ad(i) * ad(j) - ad(j) * ad(i);
        for (Eigen::Index k = 0; k < n; ++k) lhs -= structure(i, j, k) * ad(k);
        worst = std::max(worst, lhs.cwiseAbs().maxCoeff());
      }
    }
    const Scalar s = structure_scale();
    return detail::relative_residual(worst, s * s);
  }

 private:
  void validate(Scalar tol = Scalar(1e-9)) const {
    if (const Scalar r = antisymmetry_residual(); r > tol) {
      std::ostringstream os;
      os << "structure constants are not antisymmetric (residual " << r << ")";
      throw ConstructionError(os.str());
    }
    if (const Scalar r = jacobi_residual(); r > tol) {
      std::ostringstream os;
      os << "structure constants violate the Jacobi identity (residual " << r << ")";
      throw ConstructionError(os.str());
    }
  }

  std::vector<Matrix<Scalar>> ad_;
  std::vector<std::string> labels_;
};

template <typename Scalar, typename DX>
Matrix<Scalar> adjoint(const LieAlgebra<Scalar>& alg, const Eigen::MatrixBase<DX>& x) {
  if (x.size() != alg.dim()) throw InputError("adjoint: vector length does not match algebra");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(alg.dim(), alg.dim());
  for (Eigen::Index i = 0; i < alg.dim(); ++i) out += x(i) * alg.ad(i);
  return out;
}

template <typename Scalar, typename DX, typename DY>
Vector<Scalar> bracket(const LieAlgebra<Scalar>& alg, const Eigen::MatrixBase<DX>& x,
                       const Eigen::MatrixBase<DY>& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim()) {
    throw InputError("bracket: vector length does not match algebra");
  }
  return adjoint(alg, x) * y;
}

/// B(X, Y) = -trace(ad_X ad_Y), minus the Killing form. Positive definite
/// exactly for compact semisimple algebras; indefinite results are returned as is.
template <typename Scalar>
BilinearForm<Scalar> killing_form_positive(const LieAlgebra<Scalar>& alg) {
  const auto n = alg.dim();
  Matrix<Scalar> b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = -(alg.ad(i) * alg.ad(j)).trace();
  return BilinearForm<Scalar>(b);
}

/// Largest residual of B([X,Y],Z) + B(Y,[X,Z]) over basis triples.
template <typename Scalar>
Scalar ad_invariance_residual(const LieAlgebra<Scalar>& alg, const Matrix<Scalar>& form) {
  Scalar worst(0);
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    const Matrix<Scalar> skew = alg.ad(i).transpose() * form + form * alg.ad(i);
    worst = std::max(worst, skew.cwiseAbs().maxCoeff());
  }
  const Scalar scale = form.cwiseAbs().maxCoeff() * alg.structure_scale();
  return detail::relative_residual(worst, scale);
}

template <typename Scalar>
LieAlgebra<Scalar> direct_sum(const LieAlgebra<Scalar>& a, const LieAlgebra<Scalar>& b,
                              const std::string& prefix_a = "a.",
                              const std::string& prefix_b = "b.") {
  const auto na = a.dim();
  const auto nb = b.dim();
  const auto n = na + nb;
  std::vector<Matrix<Scalar>> ad;
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < na; ++i) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    m.topLeftCorner(na, na) = a.ad(i);
    ad.push_back(std::move(m));
    labels.push_back(prefix_a + a.labels()[static_cast<std::size_t>(i)]);
  }
  for (Eigen::Index i = 0; i < nb; ++i) {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    m.bottomRightCorner(nb, nb) = b.ad(i);
    ad.push_back(std::move(m));
    labels.push_back(prefix_b + b.labels()[static_cast<std::size_t>(i)]);
  }
  return LieAlgebra<Scalar>::from_adjoints(std::move(ad), std::move(labels),
                                           LieAlgebra<Scalar>::Validation::skip);
}

template <typename Scalar>
struct MatrixAlgebra {
  LieAlgebra<Scalar> algebra;
  Representation<Scalar> representation;
};

/// Structure constants of the span of real matrices, with bracket
/// -(XY - YX). The matrices are kept as the representation.
template <typename Scalar>
MatrixAlgebra<Scalar> matrix_algebra(const std::vector<Matrix<Scalar>>& basis,
                                     std::vector<std::string> labels = {},
                                     Scalar tol = Scalar(1e-9)) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  if (n == 0) throw InputError("matrix_algebra: empty basis");
  const Eigen::Index rows = basis.front().rows();
  const Eigen::Index cols = basis.front().cols();
  if (rows != cols) throw InputError("matrix_algebra: matrices must be square");
  Matrix<Scalar> vec(rows * cols, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& m = basis[static_cast<std::size_t>(i)];
    if (m.rows() != rows || m.cols() != cols) {
      throw InputError("matrix_algebra: matrices must share a size");
    }
    vec.col(i) = m.reshaped();
  }
  if (numerical_rank(vec, tol) != n) {
    throw ConstructionError("matrix_algebra: basis matrices are linearly dependent");
  }
  const auto qr = vec.colPivHouseholderQr();
  std::vector<Matrix<Scalar>> ad(static_cast<std::size_t>(n), Matrix<Scalar>::Zero(n, n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& x = basis[static_cast<std::size_t>(i)];
      const auto& y = basis[static_cast<std::size_t>(j)];
      const Matrix<Scalar> comm = x * y - y * x;
      const Vector<Scalar> target = comm.reshaped();
      const Vector<Scalar> coeff = qr.solve(target);
      const Scalar resid = (vec * coeff - target).norm();
      const Scalar scale = std::max(x.norm() * y.norm(), Scalar(1e-300));
      if (resid > tol * scale) {
        std::ostringstream os;
        os << "matrix_algebra: commutator of basis elements " << i << " and " << j
           << " leaves the span (residual " << resid / scale << ")";
        throw ConstructionError(os.str());
      }
      ad[static_cast<std::size_t>(i)].col(j) = -coeff;
    }
  }
  return {LieAlgebra<Scalar>::from_adjoints(std::move(ad), std::move(labels)),
          Representation<Scalar>{basis}};
}

template <typename Scalar>
MatrixAlgebra<Scalar> matrix_algebra(
    const std::vector<Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>>& basis,
    std::vector<std::string> labels = {}, Scalar tol = Scalar(1e-9)) {
  std::vector<Matrix<Scalar>> real;
  real.reserve(basis.size());
  for (const auto& z : basis) real.push_back(realify<Scalar>(z));
  return matrix_algebra<Scalar>(real, std::move(labels), tol);
}

/// Largest W inside V with [g, W] contained in W for every generator g,
/// by the descending iteration W <- {X in W : ad(g) X in W}.
template <typename Scalar>
Subspace<Scalar> largest_invariant_subspace(const LieAlgebra<Scalar>& alg,
                                            const Subspace<Scalar>& generators,
                                            const Subspace<Scalar>& v,
                                            Scalar rel_tol = Scalar(1e-9)) {
  const auto n = alg.dim();
  if (generators.ambient_dim() != n || v.ambient_dim() != n) {
    throw InputError("largest_invariant_subspace: subspaces must live in the algebra");
  }
  std::vector<Matrix<Scalar>> ads;
  Scalar scale(0);
  for (Eigen::Index g = 0; g < generators.dim(); ++g) {
    ads.push_back(adjoint(alg, generators.basis().col(g)));
    scale = std::max(scale, ads.back().norm());
  }
  Subspace<Scalar> w = v;
  const Eigen::Index cap = v.dim() + 1;
  for (Eigen::Index iter = 0; iter <= cap; ++iter) {
    if (w.dim() == 0 || ads.empty()) return w;
    const Matrix<Scalar>& q = w.basis();
    const Matrix<Scalar> off = Matrix<Scalar>::Identity(n, n) - q * q.transpose();
    Matrix<Scalar> system(n * static_cast<Eigen::Index>(ads.size()), w.dim());
    for (std::size_t g = 0; g < ads.size(); ++g) {
      system.middleRows(static_cast<Eigen::Index>(g) * n, n) = off * ads[g] * q;
    }
    // absolute scale: the system vanishes identically once W is invariant
    const Matrix<Scalar> ker = kernel_basis(system, rel_tol, scale);
    if (ker.cols() == w.dim()) return w;
    w = Subspace<Scalar>::from_orthonormal(q * ker);
  }
  throw InternalError("largest_invariant_subspace: closure iteration did not stabilise");
}

/// Elements X whose adjoint is skew for `metric` (given on the whole
/// algebra): for a left-invariant metric these are the left-invariant
/// fields that are also Killing.
template <typename Scalar>
Subspace<Scalar> bi_invariant_directions(const LieAlgebra<Scalar>& alg,
                                         const BilinearForm<Scalar>& metric,
                                         Scalar rel_tol = Scalar(1e-9)) {
  const auto n = alg.dim();
  if (metric.dim() != n) throw InputError("bi_invariant_directions: metric must cover the algebra");
  Matrix<Scalar> system(n * n, n);
  Scalar scale(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix<Scalar> skew = metric.gram() * alg.ad(i) + alg.ad(i).transpose() * metric.gram();
    system.col(i) = skew.reshaped();
    scale = std::max(scale, Scalar(metric.gram().norm() * alg.ad(i).norm()));
  }
  return Subspace<Scalar>::span(kernel_basis(system, rel_tol, scale), rel_tol);
}

/// Centre {X : [X, g] = 0}.
template <typename Scalar>
Subspace<Scalar> center(const LieAlgebra<Scalar>& alg, Scalar rel_tol = Scalar(1e-9)) {
  const auto n = alg.dim();
  Matrix<Scalar> system(n * n, n);
  for (Eigen::Index j = 0; j < n; ++j) system.middleRows(j * n, n) = alg.ad(j);
  return Subspace<Scalar>::span(kernel_basis(system, rel_tol, alg.structure_scale()), rel_tol);
}

/// Derived algebra [g, g].
template <typename Scalar>
Subspace<Scalar> derived_algebra(const LieAlgebra<Scalar>& alg, Scalar rel_tol = Scalar(1e-9)) {
  const auto n = alg.dim();
  Matrix<Scalar> all(n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) all.middleCols(i * n, n) = alg.ad(i);
  return Subspace<Scalar>::span(all, rel_tol, alg.structure_scale());
}

/// Ad-invariant inner product for a compact algebra g = [g,g] + z: B on the
/// derived part plus the Euclidean form of the centre coordinates, where the
/// centre component is taken along [g,g].
template <typename Scalar>
BilinearForm<Scalar> invariant_inner_product(const LieAlgebra<Scalar>& alg,
                                             Scalar rel_tol = Scalar(1e-9)) {
  const auto n = alg.dim();
  const Subspace<Scalar> z = center(alg, rel_tol);
  const Subspace<Scalar> d = derived_algebra(alg, rel_tol);
  if (z.dim() + d.dim() != n || z.intersection(d, rel_tol).dim() != 0) {
    throw InternalError("invariant_inner_product: algebra is not reductive");
  }
  Matrix<Scalar> split(n, n);
  split << d.basis(), z.basis();
  const Matrix<Scalar> coords = split.inverse();
  const Matrix<Scalar> zc = coords.bottomRows(z.dim());
  Matrix<Scalar> q = killing_form_positive(alg).gram() + zc.transpose() * zc;
  BilinearForm<Scalar> form(q);
  if (!form.is_positive_definite(rel_tol)) {
    throw InternalError("invariant_inner_product: algebra is not of compact type");
  }
  return form;
}

}  // namespace symidx
