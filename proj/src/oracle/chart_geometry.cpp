#include "symidx/oracle/chart_geometry.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace symidx::oracle {

namespace {

// Five-point central difference of f at 0 along one coordinate.
template <typename F>
auto central_difference(F f, double h) -> decltype(f(0.0)) {
  const auto m2 = f(-2.0 * h), m1 = f(-h), p1 = f(h), p2 = f(2.0 * h);
  return ((m2 - 8.0 * m1) + (8.0 * p1 - p2)) / (12.0 * h);
}

}  // namespace

ChartGeometry::ChartGeometry(const HomogeneousSpace<double>& sp, double step) : h_(step) {
  if (!sp.representation()) throw InputError("ChartGeometry: space has no matrix representation");
  rep_ = sp.representation()->generators;
  dim_ = sp.dim();
  evaluation_ = sp.evaluation();
  gram_ = sp.metric().gram();
  const Eigen::Index n = sp.algebra().dim();
  const Eigen::Index size = sp.representation()->size();
  rep_vec_.resize(size * size, n);
  for (Eigen::Index a = 0; a < n; ++a) rep_vec_.col(a) = rep_[static_cast<std::size_t>(a)].reshaped();
  rep_qr_.compute(rep_vec_);
  if (rep_qr_.rank() != n) throw InputError("ChartGeometry: representation is not faithful");
  for (Eigen::Index a = 0; a < dim_; ++a) chart_gens_.push_back((*sp.representation())(sp.complement().col(a)));
}

Matrix<double> ChartGeometry::exp_sum(const Vector<double>& x) const {
  Matrix<double> a = Matrix<double>::Zero(rep_.front().rows(), rep_.front().cols());
  for (Eigen::Index c = 0; c < dim_; ++c) a += x(c) * chart_gens_[static_cast<std::size_t>(c)];
  return a;
}

Vector<double> ChartGeometry::algebra_coords(const Matrix<double>& y) const {
  const Vector<double> v = y.reshaped();
  return rep_qr_.solve(v);
}

Matrix<double> ChartGeometry::frame(const Vector<double>& x) const {
  const Matrix<double> a = exp_sum(x);
  const Eigen::Index s = a.rows();
  const Matrix<double> inv = Matrix<double>((-a).exp());
  Matrix<double> f(dim_, dim_);
  for (Eigen::Index c = 0; c < dim_; ++c) {
    // d/dx_c exp(A(x)) is the upper right block of exp([[A, dA], [0, A]])
    Matrix<double> block = Matrix<double>::Zero(2 * s, 2 * s);
    block.topLeftCorner(s, s) = a;
    block.bottomRightCorner(s, s) = a;
    block.topRightCorner(s, s) = chart_gens_[static_cast<std::size_t>(c)];
    const Matrix<double> e = block.exp();
    f.col(c) = evaluation_ * algebra_coords(inv * e.topRightCorner(s, s));
  }
  return f;
}

Matrix<double> ChartGeometry::metric(const Vector<double>& x) const {
  const Matrix<double> f = frame(x);
  return f.transpose() * gram_ * f;
}

std::vector<Matrix<double>> ChartGeometry::christoffel(const Vector<double>& x) const {
  std::vector<Matrix<double>> dg;
  for (Eigen::Index c = 0; c < dim_; ++c) {
    dg.push_back(central_difference(
        [&](double t) { return metric(Vector<double>(x + t * Vector<double>::Unit(dim_, c))); }, h_));
  }
  const Matrix<double> ginv = metric(x).inverse();
  std::vector<Matrix<double>> gamma(static_cast<std::size_t>(dim_), Matrix<double>::Zero(dim_, dim_));
  for (Eigen::Index l = 0; l < dim_; ++l)
    for (Eigen::Index i = 0; i < dim_; ++i)
      for (Eigen::Index j = 0; j < dim_; ++j) {
        double acc = 0;
        for (Eigen::Index m = 0; m < dim_; ++m) {
          const auto mi = static_cast<std::size_t>(i), mj = static_cast<std::size_t>(j),
                     mm = static_cast<std::size_t>(m);
          acc += ginv(l, m) * (dg[mi](m, j) + dg[mj](m, i) - dg[mm](i, j));
        }
        gamma[static_cast<std::size_t>(l)](i, j) = 0.5 * acc;
      }
  return gamma;
}

Vector<double> ChartGeometry::killing_field(const Vector<double>& x_alg, const Vector<double>& x) const {
  const Matrix<double> a = exp_sum(x);
  const Matrix<double> sigma = a.exp();
  const Matrix<double> inv = Matrix<double>((-a).exp());
  Matrix<double> rx = Matrix<double>::Zero(sigma.rows(), sigma.cols());
  for (std::size_t i = 0; i < rep_.size(); ++i) rx += x_alg(static_cast<Eigen::Index>(i)) * rep_[i];
  const Vector<double> value = evaluation_ * algebra_coords(inv * rx * sigma);
  return frame(x).lu().solve(value);
}

Matrix<double> ChartGeometry::covariant_derivative(const Vector<double>& x_alg) const {
  const Vector<double> origin = Vector<double>::Zero(dim_);
  const Vector<double> xi = killing_field(x_alg, origin);
  const auto gamma = christoffel(origin);
  Matrix<double> n(dim_, dim_);
  for (Eigen::Index c = 0; c < dim_; ++c) {
    const Vector<double> d = central_difference(
        [&](double t) { return killing_field(x_alg, Vector<double>(t * Vector<double>::Unit(dim_, c))); }, h_);
    for (Eigen::Index l = 0; l < dim_; ++l) n(l, c) = d(l) + gamma[static_cast<std::size_t>(l)].row(c).dot(xi);
  }
  return n;
}

std::vector<Matrix<double>> ChartGeometry::christoffel_derivative(const Vector<double>& x, Eigen::Index i) const {
  auto at = [&](double t) { return christoffel(Vector<double>(x + t * Vector<double>::Unit(dim_, i))); };
  const auto m2 = at(-2.0 * h_), m1 = at(-h_), p1 = at(h_), p2 = at(2.0 * h_);
  std::vector<Matrix<double>> d;
  for (std::size_t l = 0; l < m2.size(); ++l) {
    d.push_back(((m2[l] - 8.0 * m1[l]) + (8.0 * p1[l] - p2[l])) / (12.0 * h_));
  }
  return d;
}

Matrix<double> ChartGeometry::jacobi_operator(const Vector<double>& v) const {
  if (v.size() != dim_) throw InputError("jacobi_operator: vector length does not match dim(m)");
  const Vector<double> origin = Vector<double>::Zero(dim_);
  const auto gamma = christoffel(origin);
  std::vector<std::vector<Matrix<double>>> dgamma;  // dgamma[i][l](j, k) = d_i Gamma^l_jk
  for (Eigen::Index i = 0; i < dim_; ++i) dgamma.push_back(christoffel_derivative(origin, i));
  auto g = [&](Eigen::Index l, Eigen::Index i, Eigen::Index j) {
    return gamma[static_cast<std::size_t>(l)](i, j);
  };
  // R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik, component of R(d_i, d_j) d_k
  Matrix<double> k = Matrix<double>::Zero(dim_, dim_);
  for (Eigen::Index l = 0; l < dim_; ++l)
    for (Eigen::Index i = 0; i < dim_; ++i)
      for (Eigen::Index j = 0; j < dim_; ++j)
        for (Eigen::Index c = 0; c < dim_; ++c) {
          double r = dgamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)](j, c) -
                     dgamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)](i, c);
          for (Eigen::Index m = 0; m < dim_; ++m) r += g(l, i, m) * g(m, j, c) - g(l, j, m) * g(m, i, c);
          k(l, i) += r * v(j) * v(c);
        }
  return k;
}

Vector<double> integrate_jacobi(const Matrix<double>& k, const Vector<double>& v, const Vector<double>& w,
                                double t, int steps) {
  if (steps < 1) throw InputError("integrate_jacobi: steps must be positive");
  const Eigen::Index d = v.size();
  Vector<double> y(2 * d);
  y << v, w;
  auto rhs = [&](const Vector<double>& s) {
    Vector<double> out(2 * d);
    out << s.tail(d), -k * s.head(d);
    return out;
  };
  const double dt = t / steps;
  for (int n = 0; n < steps; ++n) {
    const Vector<double> k1 = rhs(y);
    const Vector<double> k2 = rhs(y + 0.5 * dt * k1);
    const Vector<double> k3 = rhs(y + 0.5 * dt * k2);
    const Vector<double> k4 = rhs(y + dt * k3);
    y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y.head(d);
}

}  // namespace symidx::oracle
