#pragma once

#include <vector>

#include <Eigen/Dense>

#include "conformal/cartan.hpp"
#include "conformal/lie_algebra.hpp"

namespace conformal {

/// The curvature operator pair-table: for i < j, an n x n matrix acting as
/// z -> R(e_i, e_j) z. Mirrored for i > j.
class CurvatureOperator {
public:
  CurvatureOperator(int n, std::vector<Eigen::MatrixXd> upper);

  int n() const { return n_; }
  Eigen::MatrixXd op(int i, int j) const;
  const std::vector<Eigen::MatrixXd>& values() const { return upper_; }
  double max_abs() const;

private:
  int n_;
  std::vector<Eigen::MatrixXd> upper_;
};

/// Levi-Civita connection of the bi-invariant metric: (1/2) rho(x, y).
Eigen::VectorXd levi_civita(const TransferredBracket& rho, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y);

/// Riemann operator R(e_i, e_j) z = -(1/4) rho(rho(e_i, e_j), z).
CurvatureOperator riemann(const TransferredBracket& rho);

/// Sectional curvature (1/4) |rho(x, y)|^2 of the plane spanned by an
/// orthonormal pair. Throws InputError when x, y are not orthonormal.
double sectional(const TransferredBracket& rho, const Eigen::VectorXd& x,
                 const Eigen::VectorXd& y);

/// Metric tensor package in the orthonormal frame (g = identity): Ricci,
/// scalar curvature, Schouten tensor, Weyl operator and Cotton-York tensor.
struct MetricTensors {
  Eigen::MatrixXd ric;
  double scal = 0.0;
  Eigen::MatrixXd schouten;
  CurvatureOperator weyl;
  std::vector<Eigen::VectorXd> cotton_upper; ///< C(e_i, e_j), i < j, pair order
  double cotton_max = 0.0;
};

/// Computes Ricci by contraction of the Riemann operator, the Schouten tensor
/// from the general trace-adjustment formula, Weyl as R minus the
/// Kulkarni-Nomizu product g * L, and Cotton-York from the covariant
/// derivative of L. Requires n >= 3.
MetricTensors metric_tensors(const TransferredBracket& rho);

/// Trace of the Weyl operator, sum_i <W(e_i, a) b, e_i>, maximised over basis
/// pairs; zero for a trace-free operator.
double weyl_trace_residual(const CurvatureOperator& weyl);

/// max over i < j of |kappa0(e_i, e_j) rotation block - W(e_i, e_j)|.
/// The curvature 0-part of the normal connection and the Weyl operator are
/// computed along independent paths; agreement validates both.
double weyl_cross_check(const CurvatureFunction& kappa, const CurvatureOperator& weyl);

} // namespace conformal
