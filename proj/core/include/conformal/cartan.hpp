#pragma once

#include <vector>

#include <Eigen/Dense>

#include "conformal/lie_algebra.hpp"
#include "conformal/mobius.hpp"

namespace conformal {

/// A connection form gamma = gamma0 + gamma1 : m_{-1} -> co(n) + m_1,
/// stored per basis vector. The 0-parts carry no scale component: each
/// gamma0(e_i) is an antisymmetric n x n matrix.
class ConnectionForm {
public:
  ConnectionForm(std::vector<Eigen::MatrixXd> gamma0,
                 std::vector<Eigen::VectorXd> gamma1);

  int n() const { return n_; }

  const Eigen::MatrixXd& gamma0(int i) const { return gamma0_[static_cast<std::size_t>(i)]; }
  const Eigen::VectorXd& gamma1(int i) const { return gamma1_[static_cast<std::size_t>(i)]; }
  const std::vector<Eigen::MatrixXd>& gamma0_list() const { return gamma0_; }

  /// Linear extension to arbitrary vectors.
  Eigen::MatrixXd gamma0_of(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gamma1_of(const Eigen::VectorXd& x) const;

private:
  int n_;
  std::vector<Eigen::MatrixXd> gamma0_;
  std::vector<Eigen::VectorXd> gamma1_;
};

/// Coefficient of the 1-part of the normal connection, -1 / (8(n-1)).
double normal_lambda(int n);

/// The normal connection form of the bracket rho:
/// gamma0(e_i) = (1/2) rho(e_i, .) and gamma1(e_i) = normal_lambda(n) e_i*.
/// Requires n >= 3.
ConnectionForm normal_connection(const TransferredBracket& rho);

/// The curvature function kappa(a, b) of a connection form, an antisymmetric
/// map with values in so(1, n+1). Values are stored for i < j and mirrored.
class CurvatureFunction {
public:
  CurvatureFunction(int n, std::vector<MobiusElement> upper);

  int n() const { return n_; }

  MobiusElement kappa(int i, int j) const;

  /// Stored values kappa(e_i, e_j), i < j, in pair order.
  const std::vector<MobiusElement>& values() const { return upper_; }

  Eigen::VectorXd minus1_part(int i, int j) const;
  Eigen::MatrixXd zero_part_rotation(int i, int j) const;
  double zero_part_scale(int i, int j) const;
  Eigen::VectorXd one_part(int i, int j) const;

  double minus1_max() const;
  double zero_max() const;
  double one_max() const;
  double max_abs() const;

private:
  int n_;
  std::vector<MobiusElement> upper_;
};

/// kappa(e_i, e_j) = -(id + gamma) rho(e_i, e_j)
///                   + [(id + gamma)(e_i), (id + gamma)(e_j)],
/// evaluated in the matrix realisation of so(1, n+1).
CurvatureFunction connection_curvature(const ConnectionForm& gamma,
                                       const TransferredBracket& rho);

/// max over i < j of |rho(e_i, e_j) + gamma0(e_j) e_i - gamma0(e_i) e_j|;
/// coincides with the max-abs of the (-1)-part of the curvature.
double torsion_residual(const ConnectionForm& gamma, const TransferredBracket& rho);

/// Violation of the trace condition sum_i kappa0(e_i, a)(b)(e_i*) = 0,
/// maximised over basis pairs (a, b).
double trace_free_residual(const CurvatureFunction& kappa);

/// Violation of the Jacobi-type identity a 0-part map must satisfy to induce
/// a Lie bracket, maximised over basis triples.
double jacobi_gamma0_residual(const std::vector<Eigen::MatrixXd>& gamma0);

/// Defect of the normal-extension trace identity linking gamma1 to gamma0,
/// maximised over basis pairs.
double normal_extension_residual(const ConnectionForm& gamma);

} // namespace conformal
