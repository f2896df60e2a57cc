#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace symidx {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Malformed caller input: wrong dimensions, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An object failed one of its construction invariants.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not meet its precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The orbit of a one-parameter group is not closed.
class NonClosedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A postcondition that should hold by construction did not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical thresholds. All rank decisions are relative to the largest
/// singular value of the matrix under inspection.
template <typename Scalar>
struct Tolerances {
  Scalar rank = Scalar(1e-9);
  Scalar residual = Scalar(1e-9);
  Scalar psd = Scalar(1e-8);
  Scalar symmetry = Scalar(1e-8);
  Scalar period = Scalar(1e-8);
};

namespace detail {

template <typename Scalar>
Scalar relative_residual(Scalar err, Scalar scale) {
  using std::abs;
  return scale > Scalar(0) ? err / scale : err;
}

}  // namespace detail

/// Numerical rank at a relative singular-value threshold.
template <typename Derived>
Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived>& a,
                            typename Derived::Scalar rel_tol) {
  using Scalar = typename Derived::Scalar;
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a.eval());
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == Scalar(0)) return 0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > rel_tol * sv(0)) ++r;
  return r;
}

/// Orthonormal basis of the null space of `a`. Singular values at or below
/// rel_tol * scale count as zero; scale defaults to the largest singular
/// value, so pass the size of the inputs when `a` may vanish identically.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(
    const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar rel_tol,
    typename Derived::Scalar scale = typename Derived::Scalar(-1)) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index cols = a.cols();
  if (cols == 0) return Matrix<Scalar>(0, 0);
  if (a.rows() == 0) return Matrix<Scalar>::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a.eval(), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Scalar ref = scale >= Scalar(0) ? scale : (sv.size() > 0 ? sv(0) : Scalar(0));
  Eigen::Index r = 0;
  if (sv.size() > 0 && sv(0) > Scalar(0)) {
    while (r < sv.size() && sv(r) > rel_tol * ref) ++r;
  }
  return svd.matrixV().rightCols(cols - r);
}

/// Orthonormal basis of the column space of `a`, with `scale` as in kernel_basis.
template <typename Derived>
Matrix<typename Derived::Scalar> range_basis(
    const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar rel_tol,
    typename Derived::Scalar scale = typename Derived::Scalar(-1)) {
  using Scalar = typename Derived::Scalar;
  if (a.cols() == 0 || a.rows() == 0) return Matrix<Scalar>(a.rows(), 0);
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a.eval(), Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const Scalar ref = scale >= Scalar(0) ? scale : sv(0);
  Eigen::Index r = 0;
  if (sv(0) > Scalar(0)) {
    while (r < sv.size() && sv(r) > rel_tol * ref) ++r;
  }
  return svd.matrixU().leftCols(r);
}

}  // namespace symidx
