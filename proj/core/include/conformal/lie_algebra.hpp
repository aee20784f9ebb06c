#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "conformal/errors.hpp"

namespace conformal {

/// Number of index pairs (i, j) with 0 <= i < j < n.
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Position of the pair (i, j), i < j, in row-major pair order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline int pair_index(int i, int j, int n) {
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

/// A finite-dimensional real Lie algebra given by structure constants on an
/// ordered abstract basis (b_0, ..., b_{n-1}).
///
/// Only the brackets [b_i, b_j] with i < j are stored; the mirror image is
/// generated on access, so antisymmetry holds exactly by construction.
/// Instances are immutable after construction and safe to share across
/// threads.
class LieAlgebraSpec {
public:
  /// `pair_table[pair_index(i,j,dim)]` holds the coordinates of [b_i, b_j].
  LieAlgebraSpec(std::string name, int dim, std::vector<Eigen::VectorXd> pair_table);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  /// Coordinates of [b_i, b_j] for any i, j (mirrored, zero on the diagonal).
  Eigen::VectorXd basis_bracket(int i, int j) const;

  /// Matrix of ad_{b_i}; column j holds the coordinates of [b_i, b_j].
  const Eigen::MatrixXd& ad(int i) const { return ad_[static_cast<std::size_t>(i)]; }

private:
  std::string name_;
  int dim_;
  std::vector<Eigen::VectorXd> table_;
  std::vector<Eigen::MatrixXd> ad_;
};

/// The Killing form B(x, y) = tr(ad_x ad_y) as a symmetric matrix on the
/// algebra basis.
struct KillingForm {
  Eigen::MatrixXd matrix;
};

/// Bilinear extension of the structure tensor: [x, y] in basis coordinates.
Eigen::VectorXd bracket(const LieAlgebraSpec& alg, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y);

KillingForm killing_form(const LieAlgebraSpec& alg);

struct JacobiCheck {
  double residual = 0.0;             ///< max-abs cyclic defect over basis triples
  std::array<int, 3> worst_triple{}; ///< triple attaining the maximum
};

/// Largest violation of the Jacobi identity over all basis triples.
JacobiCheck jacobi_check(const LieAlgebraSpec& alg);
double jacobi_residual(const LieAlgebraSpec& alg);

/// Validates the algebra (Jacobi identity within `tol`, negative definite
/// Killing form) and returns the Killing form. Throws InvalidAlgebraError or
/// NotSemisimpleError.
KillingForm assert_compact_semisimple(const LieAlgebraSpec& alg, double tol);

/// Direct sum: block structure tensor, cross-block brackets zero.
LieAlgebraSpec direct_sum(const LieAlgebraSpec& a, const LieAlgebraSpec& b);

/// Builds a named algebra from matrix commutators of a standard basis.
/// Accepts so(m) for m >= 3, su(m) for m >= 2, and '+'-separated sums,
/// e.g. "so(3)+so(3)".
LieAlgebraSpec catalog(const std::string& name);

/// Names listed by the `catalog` CLI subcommand.
std::vector<std::string> catalog_names();

/// An isometry theta : (algebra, -B) -> (R^n, standard inner product),
/// stored as the matrix sending algebra coordinates to frame coordinates.
struct OrthonormalFrame {
  Eigen::MatrixXd theta;
  Eigen::MatrixXd theta_inv;
};

/// Deterministic frame: theta = L^T where -B = L L^T is the Cholesky
/// factorisation in the given basis order.
OrthonormalFrame orthonormal_frame(const KillingForm& killing, double tol = 1e-9);

/// The Lie bracket pushed forward to frame coordinates,
/// rho(a, b) = theta [theta^{-1} a, theta^{-1} b].
class TransferredBracket {
public:
  TransferredBracket(int n, std::vector<Eigen::VectorXd> pair_table);

  int n() const { return n_; }

  /// rho(e_i, e_j) for any i, j (mirrored).
  Eigen::VectorXd rho(int i, int j) const;

  /// rho(x, y) for arbitrary coordinate vectors.
  Eigen::VectorXd apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Matrix of rho(e_i, .); column j holds rho(e_i, e_j).
  Eigen::MatrixXd ad_matrix(int i) const;

  double max_abs() const;

private:
  int n_;
  std::vector<Eigen::VectorXd> table_;
};

TransferredBracket transferred_bracket(const LieAlgebraSpec& alg,
                                       const OrthonormalFrame& frame);

} // namespace conformal
