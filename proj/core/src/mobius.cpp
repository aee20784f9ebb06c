#include "conformal/mobius.hpp"

#include <cmath>
#include <utility>

namespace conformal {

MobiusElement::MobiusElement(int n, Eigen::MatrixXd matrix)
    : n_(n), matrix_(std::move(matrix)) {
  if (n_ < 1)
    throw InputError("model dimension must be positive");
  if (matrix_.rows() != n_ + 2 || matrix_.cols() != n_ + 2)
    throw InputError("Moebius element matrix must be (n+2) x (n+2)");
}

MobiusElement MobiusElement::zero(int n) {
  return MobiusElement(n, Eigen::MatrixXd::Zero(n + 2, n + 2));
}

MobiusElement& MobiusElement::operator+=(const MobiusElement& other) {
  if (other.n_ != n_)
    throw InputError("Moebius element dimensions do not match");
  matrix_ += other.matrix_;
  return *this;
}

MobiusElement& MobiusElement::operator-=(const MobiusElement& other) {
  if (other.n_ != n_)
    throw InputError("Moebius element dimensions do not match");
  matrix_ -= other.matrix_;
  return *this;
}

MobiusElement& MobiusElement::operator*=(double s) {
  matrix_ *= s;
  return *this;
}

MobiusElement operator+(MobiusElement a, const MobiusElement& b) {
  a += b;
  return a;
}

MobiusElement operator-(MobiusElement a, const MobiusElement& b) {
  a -= b;
  return a;
}

MobiusElement operator*(double s, MobiusElement a) {
  a *= s;
  return a;
}

Eigen::MatrixXd minkowski_gram(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + 2, n + 2);
  j(0, n + 1) = 1.0;
  j(n + 1, 0) = 1.0;
  for (int i = 1; i <= n; ++i)
    j(i, i) = 1.0;
  return j;
}

double so_membership_residual(const MobiusElement& x) {
  const Eigen::MatrixXd j = minkowski_gram(x.n());
  return (x.matrix().transpose() * j + j * x.matrix()).cwiseAbs().maxCoeff();
}

MobiusElement embed_m_minus1(const Eigen::VectorXd& m) {
  const int n = static_cast<int>(m.size());
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n + 2, n + 2);
  x.block(1, 0, n, 1) = m;
  x.block(n + 1, 1, 1, n) = -m.transpose();
  return MobiusElement(n, std::move(x));
}

MobiusElement embed_p0(const Eigen::MatrixXd& rotation, double scale) {
  const int n = static_cast<int>(rotation.rows());
  if (rotation.cols() != n)
    throw InputError("rotation part must be square");
  const double skew = (rotation + rotation.transpose()).cwiseAbs().maxCoeff();
  const double mag = rotation.cwiseAbs().maxCoeff();
  if (skew > 1e-12 * std::max(1.0, mag))
    throw InputError("rotation part of a co(n) element must be antisymmetric");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n + 2, n + 2);
  x(0, 0) = -scale;
  x(n + 1, n + 1) = scale;
  x.block(1, 1, n, n) = rotation;
  return MobiusElement(n, std::move(x));
}

MobiusElement embed_m1(const Eigen::VectorXd& l) {
  const int n = static_cast<int>(l.size());
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n + 2, n + 2);
  x.block(0, 1, 1, n) = l.transpose();
  x.block(1, n + 1, n, 1) = -l;
  return MobiusElement(n, std::move(x));
}

MobiusElement embed_graded(const GradedParts& parts) {
  return embed_m_minus1(parts.m_minus1) + embed_p0(parts.p0_rotation, parts.p0_scale) +
         embed_m1(parts.m_1);
}

GradedParts grade_project(const MobiusElement& x, double tol) {
  const double residual = so_membership_residual(x);
  if (residual > tol * std::max(1.0, x.max_abs()))
    throw InputError("matrix is not in so(1, n+1): membership residual " +
                     std::to_string(residual));
  const int n = x.n();
  const Eigen::MatrixXd& m = x.matrix();
  GradedParts parts;
  parts.m_minus1 = m.block(1, 0, n, 1);
  const Eigen::MatrixXd mid = m.block(1, 1, n, n);
  parts.p0_rotation = 0.5 * (mid - mid.transpose());
  parts.p0_scale = 0.5 * (m(n + 1, n + 1) - m(0, 0));
  parts.m_1 = m.block(0, 1, 1, n).transpose();
  return parts;
}

MobiusElement mobius_bracket(const MobiusElement& x, const MobiusElement& y) {
  if (x.n() != y.n())
    throw InputError("Moebius element dimensions do not match");
  return MobiusElement(x.n(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

Eigen::VectorXd dual_star(const Eigen::VectorXd& a) { return a; }

} // namespace conformal
