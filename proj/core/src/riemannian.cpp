#include "conformal/riemannian.hpp"

#include <cmath>
#include <utility>

namespace conformal {

CurvatureOperator::CurvatureOperator(int n, std::vector<Eigen::MatrixXd> upper)
    : n_(n), upper_(std::move(upper)) {
  if (static_cast<int>(upper_.size()) != pair_count(n_))
    throw InputError("curvature operator table size does not match the dimension");
}

Eigen::MatrixXd CurvatureOperator::op(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InputError("basis index out of range");
  if (i == j)
    return Eigen::MatrixXd::Zero(n_, n_);
  if (i < j)
    return upper_[static_cast<std::size_t>(pair_index(i, j, n_))];
  return -upper_[static_cast<std::size_t>(pair_index(j, i, n_))];
}

double CurvatureOperator::max_abs() const {
  double m = 0.0;
  for (const auto& r : upper_)
    m = std::max(m, r.cwiseAbs().maxCoeff());
  return m;
}

Eigen::VectorXd levi_civita(const TransferredBracket& rho, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) {
  return 0.5 * rho.apply(x, y);
}

CurvatureOperator riemann(const TransferredBracket& rho) {
  const int n = rho.n();
  std::vector<Eigen::MatrixXd> upper;
  upper.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd r = rho.rho(i, j);
      Eigen::MatrixXd m(n, n);
      for (int z = 0; z < n; ++z)
        m.col(z) = -0.25 * rho.apply(r, Eigen::VectorXd::Unit(n, z));
      upper.push_back(std::move(m));
    }
  return CurvatureOperator(n, std::move(upper));
}

double sectional(const TransferredBracket& rho, const Eigen::VectorXd& x,
                 const Eigen::VectorXd& y) {
  const int n = rho.n();
  if (x.size() != n || y.size() != n)
    throw InputError("sectional curvature operands must have length n");
  constexpr double kOrthoTol = 1e-9;
  if (std::abs(x.dot(x) - 1.0) > kOrthoTol || std::abs(y.dot(y) - 1.0) > kOrthoTol ||
      std::abs(x.dot(y)) > kOrthoTol)
    throw InputError("sectional curvature requires an orthonormal pair");
  const Eigen::VectorXd r = rho.apply(x, y);
  return 0.25 * r.dot(r);
}

namespace {

// Kulkarni-Nomizu product of the metric with a symmetric tensor, as the
// operator pair (x, y) -> (k y) x^T + y (k x)^T - (k x) y^T - x (k y)^T
// acting on basis pairs. The slot convention is pinned by cross-checking
// against the curvature 0-part of the normal connection (weyl_cross_check).
Eigen::MatrixXd kulkarni_nomizu_g(const Eigen::MatrixXd& k, int i, int j, int n) {
  const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
  const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
  const Eigen::VectorXd ki = k * ei;
  const Eigen::VectorXd kj = k * ej;
  return kj * ei.transpose() + ej * ki.transpose() - ki * ej.transpose() -
         ei * kj.transpose();
}

} // namespace

MetricTensors metric_tensors(const TransferredBracket& rho) {
  const int n = rho.n();
  if (n < 3)
    throw InputError("metric tensor package requires dimension n >= 3");
  const CurvatureOperator r = riemann(rho);

  Eigen::MatrixXd ric(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double t = 0.0;
      for (int i = 0; i < n; ++i)
        t += r.op(i, a)(i, b); // <R(e_i, e_a) e_b, e_i>
      ric(a, b) = t;
    }
  const double scal = ric.trace();

  // L = (scal / (2(n-1)) I - Ric) / (n-2)
  const Eigen::MatrixXd schouten =
      (scal / (2.0 * (n - 1)) * Eigen::MatrixXd::Identity(n, n) - ric) / (n - 2.0);

  std::vector<Eigen::MatrixXd> weyl_upper;
  weyl_upper.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      weyl_upper.push_back(r.op(i, j) - kulkarni_nomizu_g(schouten, i, j, n));

  // C(x, y) = (grad_x L)(y) - (grad_y L)(x) with
  // (grad_x L)(y) = (1/2) rho(x, L y) - L ((1/2) rho(x, y))
  std::vector<Eigen::VectorXd> cotton;
  cotton.reserve(static_cast<std::size_t>(pair_count(n)));
  double cotton_max = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      const Eigen::VectorXd rij = rho.rho(i, j);
      Eigen::VectorXd c = 0.5 * rho.apply(ei, schouten * ej);
      c -= 0.5 * rho.apply(ej, schouten * ei);
      c -= schouten * rij; // combines the -L(rho/2) terms of both derivatives
      if (c.size() > 0)
        cotton_max = std::max(cotton_max, c.cwiseAbs().maxCoeff());
      cotton.push_back(std::move(c));
    }

  MetricTensors out{std::move(ric), scal, schouten,
                    CurvatureOperator(n, std::move(weyl_upper)), std::move(cotton),
                    cotton_max};
  return out;
}

double weyl_trace_residual(const CurvatureOperator& weyl) {
  const int n = weyl.n();
  double residual = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double t = 0.0;
      for (int i = 0; i < n; ++i)
        t += weyl.op(i, a)(i, b);
      residual = std::max(residual, std::abs(t));
    }
  return residual;
}

double weyl_cross_check(const CurvatureFunction& kappa, const CurvatureOperator& weyl) {
  const int n = kappa.n();
  if (weyl.n() != n)
    throw InputError("curvature function and Weyl operator dimensions do not match");
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::MatrixXd diff = kappa.zero_part_rotation(i, j) - weyl.op(i, j);
      residual = std::max(residual, diff.cwiseAbs().maxCoeff());
    }
  return residual;
}

} // namespace conformal
