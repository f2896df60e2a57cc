#include "symidx/catalog.hpp"

#include "symidx/symmetry.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace symidx {

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& name) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("catalog '" + name + "': '" + item + "' is not a number");
    }
    if (used != item.size()) throw InputError("catalog '" + name + "': '" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

Matrix<double> columns(const std::vector<Vector<double>>& cols, Eigen::Index rows) {
  Matrix<double> m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return m;
}

MatrixAlgebra<double> spin3_pair() {
  const auto q = spin3_quaternion();
  return direct_sum(q, q, "a.", "b.");
}

Vector<double> pair(const Vector<double>& x, const Vector<double>& y) {
  Vector<double> v(6);
  v << x, y;
  return v;
}

Vector<double> quat_imag(int u) { return Vector<double>::Unit(3, u); }

Vector<double> embed_imag(const Vector<double>& z) {
  Vector<double> q = Vector<double>::Zero(4);
  q.tail(3) = z;
  return q;
}

}  // namespace

HomogeneousSpace<double> round_sphere(int n) {
  if (n < 2 || n > 5) throw InputError("round_sphere: n must lie in [2, 5]");
  auto so = so_algebra(n + 1);
  const auto dim = so.algebra.dim();
  std::vector<Vector<double>> h, m;
  Eigen::Index idx = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b, ++idx) {
      (a == 0 ? m : h).push_back(Vector<double>::Unit(dim, idx));
    }
  }
  const Matrix<double> comp = columns(m, dim);
  const Matrix<double> gram =
      killing_form_positive(so.algebra).restricted(comp).gram() / (2.0 * (n - 1));
  return HomogeneousSpace<double>(so.algebra, columns(h, dim), comp, gram,
                                  "round-sphere:" + std::to_string(n), so.representation);
}

Vector<double> m_lambda_vector(double lambda, const Vector<double>& z) {
  return pair(z, -z / lambda);
}

Subspace<double> m_lambda(double lambda) {
  std::vector<Vector<double>> v;
  for (int u = 0; u < 3; ++u) v.push_back(m_lambda_vector(lambda, quat_imag(u)));
  return Subspace<double>::span(columns(v, 6));
}

std::optional<std::string> so4_so2_warning(double lambda) {
  if (lambda > 1.0) {
    std::ostringstream os;
    os << "lambda = " << lambda << " > 1: the metric is homothetic to the one with lambda = "
       << 1.0 / lambda;
    return os.str();
  }
  return std::nullopt;
}

HomogeneousSpace<double> so4_so2(double lambda, double s, std::optional<double> t) {
  if (!(lambda > 0.0)) throw InputError("so4_so2: lambda must be positive");
  if (!(s > 0.0 && s < 2.0)) throw InputError("so4_so2: s must lie in (0, 2)");
  const double tt = t.value_or(2.0 - s);
  if (!(tt > 0.0)) throw InputError("so4_so2: t must be positive");
  const auto g = spin3_pair();
  const Vector<double> i = quat_imag(0), j = quat_imag(1), k = quat_imag(2);
  // |(Z, Z)|^2 = 8 (1 + lambda), |(Z, -Z/lambda)|^2 = 8 (1 + 1/lambda) under (B, lambda B)
  const double np = std::sqrt(8.0 * (1.0 + lambda));
  const double nv = std::sqrt(8.0 * (1.0 + 1.0 / lambda));
  Matrix<double> iso(6, 1);
  iso.col(0) = pair(i, i);
  const Matrix<double> comp = columns({pair(j, j) / np, pair(k, k) / np, m_lambda_vector(lambda, i) / nv,
                                       m_lambda_vector(lambda, j) / nv, m_lambda_vector(lambda, k) / nv},
                                      6);
  Vector<double> diag(5);
  diag << 2.0, 2.0, s, tt, tt;
  std::ostringstream label;
  label.precision(12);
  label << "so4-so2:" << lambda << "," << s;
  if (t) label << "," << *t;
  return HomogeneousSpace<double>(g.algebra, iso, comp, diag.asDiagonal().toDenseMatrix(), label.str(),
                                  g.representation);
}

HomogeneousSpace<double> spin3_metric(double a1, double a2, double a3) {
  if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0)) throw InputError("spin3_metric: eigenvalues must be positive");
  const auto g = spin3_quaternion();
  Vector<double> diag(3);
  diag << a3, a1, a2;  // algebra order (i, j, k)
  std::ostringstream label;
  label.precision(12);
  label << "spin3:" << a1 << "," << a2 << "," << a3;
  return HomogeneousSpace<double>(g.algebra, Matrix<double>(3, 0), Matrix<double>::Identity(3, 3),
                                  diag.asDiagonal().toDenseMatrix(), label.str(), g.representation);
}

HomogeneousSpace<double> from_evaluation(const LieAlgebra<double>& algebra, const Matrix<double>& eval,
                                         const Matrix<double>& inner, const std::string& label,
                                         std::optional<Representation<double>> rep) {
  if (eval.cols() != algebra.dim()) throw InputError("from_evaluation: map must act on the algebra");
  if (inner.rows() != eval.rows() || inner.cols() != eval.rows()) {
    throw InputError("from_evaluation: inner product does not match the target dimension");
  }
  const Matrix<double> h = kernel_basis(eval, 1e-9);
  const Matrix<double> iso = h.cols() ? h : Matrix<double>(algebra.dim(), 0);
  const Matrix<double> comp = HomogeneousSpace<double>::default_complement(algebra, iso);
  const Matrix<double> em = eval * comp;
  return HomogeneousSpace<double>(algebra, iso, comp, em.transpose() * inner * em, label, std::move(rep));
}

HomogeneousSpace<double> orbit_space(const MatrixAlgebra<double>& amb, const Matrix<double>& point,
                                     OrbitAction action, double scale, const std::string& label) {
  const auto& gens = amb.representation.generators;
  const auto n = amb.algebra.dim();
  if (static_cast<Eigen::Index>(gens.size()) != n) throw InputError("orbit_space: representation incomplete");
  const Eigen::Index size = amb.representation.size();
  if (action == OrbitAction::conjugation && (point.rows() != size || point.cols() != size)) {
    throw InputError("orbit_space: point must be a square matrix of the representation size");
  }
  if (action == OrbitAction::linear && (point.rows() != size || point.cols() != 1)) {
    throw InputError("orbit_space: point must be a vector of the representation size");
  }
  if (!(scale > 0.0)) throw InputError("orbit_space: scale must be positive");
  Matrix<double> eval(point.size(), n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto& x = gens[static_cast<std::size_t>(a)];
    const Matrix<double> tangent = action == OrbitAction::conjugation ? Matrix<double>(x * point - point * x)
                                                                      : Matrix<double>(x * point);
    eval.col(a) = tangent.reshaped();
  }
  const Matrix<double> inner = scale * Matrix<double>::Identity(point.size(), point.size());
  return from_evaluation(amb.algebra, eval, inner, label, amb.representation);
}

ProductOfSpheres product_of_spheres(double rho) {
  if (!(rho > 0.0)) throw InputError("product_of_spheres: rho must be positive");
  const auto g = spin3_pair();
  Vector<double> q = Vector<double>::Zero(4), k = Vector<double>::Zero(4);
  q(1) = rho;  // rho i in Im H
  k(1) = 1.0;  // i in S^3
  Matrix<double> eval = Matrix<double>::Zero(8, 6);
  for (int u = 0; u < 3; ++u) {
    const Vector<double> x = embed_imag(quat_imag(u));
    // (X, 0).(q, k) = (Xq - qX, Xk),  (0, Y).(q, k) = (0, -kY)
    eval.col(u).head(4) = quaternion_product(x, q) - quaternion_product(q, x);
    eval.col(u).tail(4) = quaternion_product(x, k);
    eval.col(3 + u).tail(4) = -quaternion_product(k, x);
  }
  std::ostringstream label;
  label.precision(12);
  label << "product-spheres:" << rho;

  ProductOfSpheres out{from_evaluation(g.algebra, eval, Matrix<double>::Identity(8, 8), label.str(),
                                       g.representation)};
  const auto& sp = out.space;
  const double r2 = rho * rho;
  out.expected_lambda = 1.0 / (1.0 + 2.0 * r2);
  out.expected_s = 2.0 * (1.0 + r2) / (1.0 + 2.0 * r2);
  out.expected_t = 2.0 * r2 / (1.0 + 2.0 * r2);

  const auto report = transvection_space(sp);
  out.perpendicular = perpendicular_killing_space(sp, report);
  const Matrix<double>& p = out.perpendicular.basis();
  if (p.cols() != 3) {
    throw ConstructionError("product_of_spheres: perpendicular Killing space is not 3-dimensional");
  }
  // (Z1, Z2) = (Z, -Z/lambda)  =>  lambda = -|Z1|^2 / <Z1, Z2>
  Eigen::Index best = 0;
  for (Eigen::Index c = 1; c < 3; ++c) {
    if (p.col(c).head(3).norm() > p.col(best).head(3).norm()) best = c;
  }
  const Vector<double> z1 = p.col(best).head(3), z2 = p.col(best).tail(3);
  out.computed_lambda = -z1.squaredNorm() / z1.dot(z2);

  const Matrix<double> b3 = killing_form_positive(spin3_quaternion().algebra).gram();
  auto reference_norm = [&](const Vector<double>& xi) {
    const Vector<double> a = xi.head(3), b = xi.tail(3);
    return a.dot(b3 * a) + out.computed_lambda * b.dot(b3 * b);
  };
  auto metric_norm = [&](const Vector<double>& xi) {
    const Vector<double> v = sp.evaluation() * xi;
    return v.dot(sp.metric().gram() * v);
  };
  // isotropy-fixed line of the perpendicular space
  const Matrix<double> ad_h = adjoint(sp.algebra(), sp.isotropy().basis().col(0));
  const Matrix<double> fixed = kernel_basis(Matrix<double>(ad_h * p), 1e-9);
  if (fixed.cols() != 1) throw ConstructionError("product_of_spheres: isotropy-fixed line not found");
  const Vector<double> xi_fixed = p * fixed.col(0);
  const Matrix<double> rest = kernel_basis(Matrix<double>(xi_fixed.transpose() * p), 1e-9);
  const Vector<double> xi_perp = p * rest.col(0);
  out.s_prime = metric_norm(xi_fixed) / reference_norm(xi_fixed);
  out.t_prime = metric_norm(xi_perp) / reference_norm(xi_perp);
  out.computed_s = 2.0 * out.s_prime / (out.s_prime + out.t_prime);
  out.computed_t = 2.0 * out.t_prime / (out.s_prime + out.t_prime);
  return out;
}

HomogeneousSpace<double> cp2() {
  const auto su3 = su3_algebra();
  Eigen::MatrixXcd o = Eigen::MatrixXcd::Zero(3, 3);
  o(0, 0) = 1.0;
  // 1/2 Re tr(AB) on Hermitian matrices is 1/4 tr(R(A)^T R(B)) after realification
  return orbit_space(su3, realify<double>(o), OrbitAction::conjugation, 0.25, "cp2");
}

Cp2Data cp2_data() {
  const std::complex<double> I(0.0, 1.0);
  Cp2Data d;
  Eigen::MatrixXcd k1 = Eigen::MatrixXcd::Zero(3, 3), k2 = k1, k3 = k1, k4 = k1;
  k1(0, 0) = -2.0 * I;
  k1(1, 1) = I;
  k1(2, 2) = I;
  k2(1, 1) = I;
  k2(2, 2) = -I;
  k3(1, 2) = 1.0;
  k3(2, 1) = -1.0;
  k4(1, 2) = I;
  k4(2, 1) = I;
  d.k_basis = {k1, k2, k3, k4};
  d.o = Eigen::MatrixXcd::Zero(3, 3);
  d.o(0, 0) = 1.0;
  d.q = Eigen::MatrixXcd::Zero(3, 3);
  d.q(1, 1) = 1.0;
  const double theta = EIGEN_PI / 4.0;
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(3);
  u(0) = std::cos(theta);
  u(1) = std::sin(theta);
  d.p = u * u.adjoint();
  return d;
}

Centriole cp2_centriole() {
  const Cp2Data d = cp2_data();
  const auto k = matrix_algebra<double>(d.k_basis, {"u1", "h", "x", "y"});
  const Matrix<double> p = realify<double>(d.p);
  const Matrix<double> q = realify<double>(d.q);
  Centriole c{orbit_space(k, p, OrbitAction::conjugation, 0.25, "cp2-centriole"), {}};
  const auto& sp = c.space;
  auto action_matrix = [&](const Matrix<double>& point) {
    Matrix<double> m(point.size(), k.algebra.dim());
    for (Eigen::Index a = 0; a < k.algebra.dim(); ++a) {
      const auto& x = k.representation.generators[static_cast<std::size_t>(a)];
      m.col(a) = Matrix<double>(x * point - point * x).reshaped();
    }
    return m;
  };
  const Matrix<double> at_q = action_matrix(q);
  auto& r = c.report;
  r.dim_B = numerical_rank(at_q, 1e-9);
  const Matrix<double> k_plus = kernel_basis(at_q, 1e-9);
  r.dim_fiber = numerical_rank(Matrix<double>(action_matrix(p) * k_plus), 1e-9);
  r.dim_S = sp.dim();
  r.coindex_S = transvection_space(sp).coindex;
  r.leaf_tangent = Subspace<double>::span(Matrix<double>(sp.evaluation() * k_plus));

  const Matrix<double> dk = derived_algebra(k.algebra).basis();
  const Matrix<double> ed = sp.evaluation() * dk;
  const Matrix<double> gram = ed.transpose() * sp.metric().gram() * ed;
  const Matrix<double> b = killing_form_positive(k.algebra).restricted(dk).gram();
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<double>> es(gram, b);
  const Vector<double> mu = es.eigenvalues();
  if (mu.size() != 3) throw InternalError("cp2_centriole: derived algebra is not 3-dimensional");
  // the distinguished eigenvalue is the one not in the closest pair
  const bool low_pair = std::abs(mu(0) - mu(1)) <= std::abs(mu(1) - mu(2));
  const double single = low_pair ? mu(2) : mu(0);
  const double paired = low_pair ? (mu(0) + mu(1)) / 2.0 : (mu(1) + mu(2)) / 2.0;
  r.berger_t = 2.0 * paired / single;
  r.metric_eigenvalues = mu * (2.0 / single);
  return c;
}

HomogeneousSpace<double> catalog_space(const std::string& name) {
  const auto colon = name.find(':');
  const std::string family = name.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  const auto nums = args.empty() ? std::vector<double>{} : parse_numbers(args, name);
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (nums.size() < lo || nums.size() > hi) throw InputError("catalog '" + name + "': wrong parameter count");
  };
  if (family == "round-sphere") {
    need(1, 1);
    if (nums[0] != std::floor(nums[0])) throw InputError("catalog '" + name + "': n must be an integer");
    return round_sphere(static_cast<int>(nums[0]));
  }
  if (family == "so4-so2") {
    need(2, 3);
    return so4_so2(nums[0], nums[1], nums.size() == 3 ? std::optional<double>(nums[2]) : std::nullopt);
  }
  if (family == "spin3") {
    need(3, 3);
    return spin3_metric(nums[0], nums[1], nums[2]);
  }
  if (family == "product-spheres") {
    need(1, 1);
    return product_of_spheres(nums[0]).space;
  }
  if (family == "cp2") {
    need(0, 0);
    return cp2();
  }
  if (family == "cp2-centriole") {
    need(0, 0);
    return cp2_centriole().space;
  }
  throw InputError("unknown catalog space '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"round-sphere:n", "so4-so2:lambda,s[,t]", "spin3:a1,a2,a3", "product-spheres:rho", "cp2",
          "cp2-centriole"};
}

}  // namespace symidx
