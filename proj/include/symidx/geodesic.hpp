#pragma once

#include "symidx/homogeneous_space.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace symidx {

namespace detail {

// Best rational approximation p/q of r with q <= max_den, via continued
// fractions; returns false if none is within tol.
template <typename Scalar>
bool rational_approximation(Scalar r, Scalar tol, long max_den, long& p, long& q) {
  using std::abs;
  using std::floor;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Scalar x = r;
  for (int iter = 0; iter < 64; ++iter) {
    const Scalar a_s = floor(x);
    const long a = static_cast<long>(a_s);
    const long p2 = a * p1 + p0;
    const long q2 = a * q1 + q0;
    if (q2 > max_den) return false;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (abs(r - Scalar(p1) / Scalar(q1)) <= tol * std::max(Scalar(1), abs(r))) {
      p = p1;
      q = q1;
      return true;
    }
    const Scalar frac = x - a_s;
    if (frac == Scalar(0)) return false;
    x = Scalar(1) / frac;
  }
  return false;
}

}  // namespace detail

/// Primitive period of t -> exp(t rho(X)), from the rotation frequencies of
/// rho(X). Throws NonClosedError when the frequencies are incommensurable
/// or all zero.
template <typename Scalar>
Scalar primitive_period(const Matrix<Scalar>& rx, Scalar tol = Scalar(1e-8), long max_den = 1000) {
  using std::abs;
  const Eigen::EigenSolver<Matrix<Scalar>> es(rx, false);
  const auto ev = es.eigenvalues();
  const Scalar scale = std::max(ev.cwiseAbs().maxCoeff(), Scalar(1e-300));
  std::vector<Scalar> freq;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (abs(ev(i).real()) > tol * scale) throw NonClosedError("primitive_period: represented element is not skew");
    const Scalar f = abs(ev(i).imag());
    if (f > tol * scale) freq.push_back(f);
  }
  if (freq.empty()) throw NonClosedError("primitive_period: one-parameter group is not periodic");
  const Scalar f1 = freq.front();
  std::vector<long> num, den;
  for (Scalar f : freq) {
    long p = 0, q = 1;
    if (!detail::rational_approximation(f / f1, tol, max_den, p, q)) {
      std::ostringstream os;
      os << "primitive_period: frequencies " << f1 << " and " << f << " are incommensurable";
      throw NonClosedError(os.str());
    }
    num.push_back(p);
    den.push_back(q);
  }
  long lcm = 1;
  for (long q : den) lcm = std::lcm(lcm, q);
  long g = 0;
  for (std::size_t i = 0; i < num.size(); ++i) g = std::gcd(g, num[i] * (lcm / den[i]));
  const Scalar theta = f1 * Scalar(g) / Scalar(lcm);
  return Scalar(2) * Scalar(EIGEN_PI) / theta;
}

/// Length of the closed geodesic t -> exp(tX).p over one primitive period
/// of exp(tX) in the represented group.
template <typename Scalar, typename Derived>
Scalar closed_geodesic_length(const HomogeneousSpace<Scalar>& sp, const Eigen::MatrixBase<Derived>& x,
                              const Representation<Scalar>& rep, const Tolerances<Scalar>& tol = {}) {
  using std::sqrt;
  if (x.size() != sp.algebra().dim()) throw InputError("closed_geodesic_length: vector length does not match algebra");
  if (static_cast<Eigen::Index>(rep.generators.size()) != sp.algebra().dim()) {
    throw InputError("closed_geodesic_length: representation does not match algebra");
  }
  const Vector<Scalar> v = sp.evaluation() * x;
  const Scalar len = sqrt(v.dot(sp.metric().gram() * v));
  if (!(len > Scalar(0))) throw PreconditionError("closed_geodesic_length: X vanishes at the base point");
  // nabla_{X.p} X = 0 is the geodesic equation for exp(tX).p
  const Vector<Scalar> acc = nabla_at_base(sp, x) * v;
  const Scalar scale = (sp.evaluation() * adjoint(sp.algebra(), x) * sp.complement()).norm() * v.norm();
  if (acc.norm() > tol.residual * std::max(scale, Scalar(1e-300))) {
    std::ostringstream os;
    os << "closed_geodesic_length: exp(tX).p is not a geodesic (|nabla_X X| = " << acc.norm() << ")";
    throw PreconditionError(os.str());
  }
  return primitive_period(rep(x), tol.period) * len;
}

}  // namespace symidx
