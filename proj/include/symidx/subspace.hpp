#pragma once

#include "symidx/numeric.hpp"

#include <Eigen/Eigenvalues>

namespace symidx {

/// A linear subspace of R^n, stored as an orthonormal (Euclidean) basis.
template <typename Scalar>
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `spanning`; the rank is decided at `rel_tol`,
  /// relative to `scale` when given and to the largest singular value otherwise.
  template <typename Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& spanning,
                       Scalar rel_tol = Scalar(1e-9), Scalar scale = Scalar(-1)) {
    Subspace s;
    s.ambient_ = spanning.rows();
    s.basis_ = range_basis(spanning, rel_tol, scale);
    return s;
  }

  /// Wraps columns that are already orthonormal.
  static Subspace from_orthonormal(Matrix<Scalar> basis) {
    Subspace s;
    s.ambient_ = basis.rows();
    s.basis_ = std::move(basis);
    return s;
  }

  static Subspace zero(Eigen::Index n) {
    return from_orthonormal(Matrix<Scalar>(n, 0));
  }
  static Subspace full(Eigen::Index n) {
    return from_orthonormal(Matrix<Scalar>::Identity(n, n));
  }

  Eigen::Index dim() const { return basis_.cols(); }
  Eigen::Index ambient_dim() const { return ambient_; }
  const Matrix<Scalar>& basis() const { return basis_; }

  Matrix<Scalar> projector() const { return basis_ * basis_.transpose(); }

  /// Largest relative distance of the columns of `vectors` from this subspace.
  template <typename Derived>
  Scalar residual_outside(const Eigen::MatrixBase<Derived>& vectors) const {
    Scalar worst(0);
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
      const Vector<Scalar> v = vectors.col(c);
      const Scalar norm = v.norm();
      if (norm == Scalar(0)) continue;
      const Vector<Scalar> off = v - basis_ * (basis_.transpose() * v);
      worst = std::max(worst, Scalar(off.norm() / norm));
    }
    return worst;
  }

  bool contains(const Subspace& other, Scalar tol = Scalar(1e-9)) const {
    return residual_outside(other.basis()) <= tol;
  }

  /// Equality as subspaces: same dimension and mutual containment.
  bool same_as(const Subspace& other, Scalar tol = Scalar(1e-9)) const {
    return dim() == other.dim() && contains(other, tol) && other.contains(*this, tol);
  }

  Subspace sum(const Subspace& other, Scalar rel_tol = Scalar(1e-9)) const {
    Matrix<Scalar> both(ambient_, dim() + other.dim());
    both << basis_, other.basis();
    return span(both, rel_tol);
  }

  Subspace intersection(const Subspace& other, Scalar rel_tol = Scalar(1e-9)) const {
    // x = A a = B b  <=>  [A, -B](a; b) = 0
    Matrix<Scalar> stacked(ambient_, dim() + other.dim());
    stacked << basis_, -other.basis();
    const Matrix<Scalar> ker = kernel_basis(stacked, rel_tol);
    return span(basis_ * ker.topRows(dim()), rel_tol);
  }

 private:
  Eigen::Index ambient_ = 0;
  Matrix<Scalar> basis_;
};

/// Symmetric bilinear form given by its Gram matrix in some basis.
template <typename Scalar>
class BilinearForm {
 public:
  BilinearForm() = default;

  template <typename Derived>
  explicit BilinearForm(const Eigen::MatrixBase<Derived>& gram) {
    if (gram.rows() != gram.cols()) {
      throw InputError("Gram matrix must be square");
    }
    gram_ = (gram + gram.transpose()) / Scalar(2);
  }

  const Matrix<Scalar>& gram() const { return gram_; }
  Eigen::Index dim() const { return gram_.rows(); }

  template <typename A, typename B>
  Scalar operator()(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) const {
    return x.dot(gram_ * y);
  }

  Vector<Scalar> eigenvalues() const {
    if (dim() == 0) return Vector<Scalar>(0);
    return Eigen::SelfAdjointEigenSolver<Matrix<Scalar>>(gram_, Eigen::EigenvaluesOnly)
        .eigenvalues();
  }

  bool is_positive_definite(Scalar tol = Scalar(1e-9)) const {
    if (dim() == 0) return true;
    const Vector<Scalar> ev = eigenvalues();
    const Scalar scale = std::max(ev.cwiseAbs().maxCoeff(), Scalar(1));
    return ev(0) > tol * scale;
  }

  BilinearForm scaled(Scalar c) const { return BilinearForm(Matrix<Scalar>(c * gram_)); }

  /// Gram matrix of the restriction to span(basis).
  template <typename Derived>
  BilinearForm restricted(const Eigen::MatrixBase<Derived>& basis) const {
    return BilinearForm(Matrix<Scalar>(basis.transpose() * gram_ * basis));
  }

 private:
  Matrix<Scalar> gram_;
};

}  // namespace symidx
