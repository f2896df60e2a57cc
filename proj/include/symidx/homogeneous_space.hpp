#pragma once

#include "symidx/lie_algebra.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace symidx {

/// M = G/H at the base point p: the algebra g, the isotropy subalgebra h,
/// a reductive complement m identified with T_pM, and the invariant metric
/// as a Gram matrix in the basis of m.
template <typename Scalar>
class HomogeneousSpace {
 public:
  struct Options {
    bool check_effective = false;
    Tolerances<Scalar> tol{};
  };

  HomogeneousSpace() = default;

  /// `isotropy` and `complement` hold basis vectors of h and m as columns.
  /// The Gram matrix refers to the columns of `complement` exactly as given.
  HomogeneousSpace(LieAlgebra<Scalar> algebra, const Matrix<Scalar>& isotropy,
                   Matrix<Scalar> complement, const Matrix<Scalar>& gram, std::string label,
                   std::optional<Representation<Scalar>> representation = std::nullopt,
                   Options options = Options{})
      : algebra_(std::move(algebra)),
        complement_(std::move(complement)),
        metric_(gram),
        label_(std::move(label)),
        representation_(std::move(representation)) {
    const auto n = algebra_.dim();
    if (isotropy.rows() != n || complement_.rows() != n) {
      throw InputError("isotropy and complement vectors must have the algebra's dimension");
    }
    isotropy_ = isotropy.cols() == 0 ? Subspace<Scalar>::zero(n)
                                     : Subspace<Scalar>::span(isotropy, options.tol.rank);
    if (isotropy_.dim() + complement_.cols() != n) {
      throw ConstructionError("dim h + dim m must equal dim g");
    }
    if (metric_.dim() != complement_.cols()) {
      throw InputError("metric must be a dim(m) x dim(m) Gram matrix");
    }
    Matrix<Scalar> split(n, n);
    split << isotropy_.basis(), complement_;
    if (numerical_rank(split, options.tol.rank) != n) {
      throw ConstructionError("isotropy and complement do not span the algebra");
    }
    const Matrix<Scalar> coords = split.inverse();
    evaluation_ = coords.bottomRows(complement_.cols());
    if (representation_ && static_cast<Eigen::Index>(representation_->generators.size()) != n) {
      throw InputError("representation must provide one matrix per basis element");
    }
    validate(options);
  }

  /// Complement orthogonal to h for the invariant inner product of g.
  static Matrix<Scalar> default_complement(const LieAlgebra<Scalar>& algebra,
                                           const Matrix<Scalar>& isotropy,
                                           Scalar rel_tol = Scalar(1e-9)) {
    const auto q = invariant_inner_product(algebra, rel_tol);
    if (isotropy.cols() == 0) return Matrix<Scalar>::Identity(algebra.dim(), algebra.dim());
    const Matrix<Scalar> h = Subspace<Scalar>::span(isotropy, rel_tol).basis();
    return kernel_basis(Matrix<Scalar>(h.transpose() * q.gram()), rel_tol);
  }

  const LieAlgebra<Scalar>& algebra() const { return algebra_; }
  const Subspace<Scalar>& isotropy() const { return isotropy_; }
  const Matrix<Scalar>& complement() const { return complement_; }
  const BilinearForm<Scalar>& metric() const { return metric_; }
  const std::string& label() const { return label_; }
  const std::optional<Representation<Scalar>>& representation() const { return representation_; }

  /// dim M.
  Eigen::Index dim() const { return complement_.cols(); }

  /// Matrix of X -> X.p, from g-coordinates to m-coordinates.
  const Matrix<Scalar>& evaluation() const { return evaluation_; }

  template <typename Derived>
  Vector<Scalar> evaluate(const Eigen::MatrixBase<Derived>& x) const {
    if (x.size() != algebra_.dim()) throw InputError("evaluate: vector length does not match algebra");
    return evaluation_ * x;
  }

  /// The element of m with value w at p.
  template <typename Derived>
  Vector<Scalar> lift(const Eigen::MatrixBase<Derived>& w) const {
    if (w.size() != dim()) throw InputError("lift: vector length does not match dim(m)");
    return complement_ * w;
  }

  /// Copy with the metric multiplied by c.
  HomogeneousSpace rescaled(Scalar c) const {
    HomogeneousSpace s = *this;
    s.metric_ = metric_.scaled(c);
    return s;
  }

  struct Residuals {
    Scalar subalgebra = 0;
    Scalar reductive = 0;
    Scalar isotropy_invariance = 0;
    Scalar min_metric_eigenvalue = 0;
  };

  Residuals residuals() const {
    Residuals r;
    const Matrix<Scalar>& h = isotropy_.basis();
    const auto complement_space = Subspace<Scalar>::span(complement_);
    for (Eigen::Index a = 0; a < h.cols(); ++a) {
      const Matrix<Scalar> ad_z = adjoint(algebra_, h.col(a));
      r.subalgebra = std::max(r.subalgebra, isotropy_.residual_outside(ad_z * h));
      r.reductive = std::max(r.reductive, complement_space.residual_outside(ad_z * complement_));
      const Matrix<Scalar> act = evaluation_ * ad_z * complement_;
      const Matrix<Scalar> skew = metric_.gram() * act + act.transpose() * metric_.gram();
      const Scalar scale = metric_.gram().norm() * act.norm();
      r.isotropy_invariance =
          std::max(r.isotropy_invariance, detail::relative_residual(skew.norm(), scale));
    }
    const auto ev = metric_.eigenvalues();
    r.min_metric_eigenvalue = ev.size() ? ev(0) : Scalar(0);
    return r;
  }

 private:
  void validate(const Options& options) const {
    const Residuals r = residuals();
    const Scalar tol = options.tol.residual;
    auto fail = [this](const char* what, Scalar value) {
      std::ostringstream os;
      os << "homogeneous space '" << label_ << "': " << what << " (residual " << value << ")";
      throw ConstructionError(os.str());
    };
    if (r.subalgebra > tol) fail("isotropy is not a subalgebra", r.subalgebra);
    if (r.reductive > tol) fail("complement is not reductive", r.reductive);
    if (r.isotropy_invariance > tol) fail("metric is not isotropy-invariant", r.isotropy_invariance);
    if (!metric_.is_positive_definite(options.tol.rank)) {
      fail("metric is not positive definite", r.min_metric_eigenvalue);
    }
    if (options.check_effective && isotropy_.dim() > 0) {
      const auto ideal = largest_invariant_subspace(
          algebra_, Subspace<Scalar>::full(algebra_.dim()), isotropy_, options.tol.rank);
      if (ideal.dim() != 0) fail("action is not almost effective", Scalar(ideal.dim()));
    }
  }

  LieAlgebra<Scalar> algebra_;
  Subspace<Scalar> isotropy_;
  Matrix<Scalar> complement_;
  BilinearForm<Scalar> metric_;
  std::string label_;
  std::optional<Representation<Scalar>> representation_;
  Matrix<Scalar> evaluation_;
};

namespace detail {

// Koszul functional for Killing fields at p, with xi_a = lift(u_a):
//   K(a,b) = 1/2 (<Ev[xi_a,X], u_b> + <Ev[xi_a,xi_b], Ev X> + <Ev[X,xi_b], u_a>)
template <typename Scalar, typename Derived>
Matrix<Scalar> koszul_matrix(const HomogeneousSpace<Scalar>& sp, const Eigen::MatrixBase<Derived>& x) {
  const Matrix<Scalar>& e = sp.evaluation();
  const Matrix<Scalar>& m = sp.complement();
  const Matrix<Scalar>& g = sp.metric().gram();
  const auto& alg = sp.algebra();
  const Matrix<Scalar> ad_x = adjoint(alg, x);
  // column b: Ev[X, xi_b]
  const Matrix<Scalar> c3 = e * ad_x * m;
  const Vector<Scalar> w = e.transpose() * (g * (e * x));
  Matrix<Scalar> rows(alg.dim(), sp.dim());
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    rows.row(i) = w.transpose() * alg.ad(i) * m;
  }
  return (g * c3 - c3.transpose() * g + m.transpose() * rows) / Scalar(2);
}

}  // namespace detail

/// (nabla X)_p as an endomorphism of m: column a is nabla_{u_a} X, computed
/// from the Koszul formula for Killing fields.
template <typename Scalar, typename Derived>
Matrix<Scalar> nabla_at_base(const HomogeneousSpace<Scalar>& sp, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != sp.algebra().dim()) throw InputError("nabla_at_base: vector length does not match algebra");
  const Matrix<Scalar> k = detail::koszul_matrix(sp, x);
  // <N u_a, u_b> = K(a,b)  =>  N^T G = K
  return sp.metric().gram().ldlt().solve(Matrix<Scalar>(k.transpose()));
}

/// Largest relative deviation of nabla_at_base(e_i) from being metric-skew.
template <typename Scalar>
Scalar koszul_skewness_residual(const HomogeneousSpace<Scalar>& sp) {
  Scalar worst(0);
  const Matrix<Scalar>& g = sp.metric().gram();
  for (Eigen::Index i = 0; i < sp.algebra().dim(); ++i) {
    const Matrix<Scalar> gn = g * nabla_at_base(sp, Vector<Scalar>::Unit(sp.algebra().dim(), i));
    const Scalar scale = std::max(gn.norm(), g.norm() * sp.algebra().structure_scale());
    worst = std::max(worst, detail::relative_residual(Scalar((gn + gn.transpose()).norm()), scale));
  }
  return worst;
}

/// Change of the Koszul functional when a lift xi_a is moved by an isotropy
/// element; zero when the base-point formula is well defined.
template <typename Scalar>
Scalar koszul_lift_residual(const HomogeneousSpace<Scalar>& sp) {
  const auto& alg = sp.algebra();
  const Matrix<Scalar>& e = sp.evaluation();
  const Matrix<Scalar>& m = sp.complement();
  const Matrix<Scalar>& g = sp.metric().gram();
  const Matrix<Scalar>& h = sp.isotropy().basis();
  Scalar worst(0);
  for (Eigen::Index i = 0; i < alg.dim(); ++i) {
    const Vector<Scalar> x = Vector<Scalar>::Unit(alg.dim(), i);
    const Vector<Scalar> ev_x = e * x;
    for (Eigen::Index z = 0; z < h.cols(); ++z) {
      const Matrix<Scalar> ad_z = adjoint(alg, h.col(z));
      // b-th entry: <Ev[Z,X], u_b> + <Ev[Z,xi_b], Ev X>; Ev Z = 0 kills the third term
      const Vector<Scalar> t1 = g * (e * ad_z * x);
      const Vector<Scalar> t2 = (e * ad_z * m).transpose() * (g * ev_x);
      const Scalar scale = g.norm() * ad_z.norm() * std::max(x.norm(), Scalar(1));
      worst = std::max(worst, detail::relative_residual(Scalar((t1 + t2).norm()), scale));
    }
  }
  return worst;
}

}  // namespace symidx
