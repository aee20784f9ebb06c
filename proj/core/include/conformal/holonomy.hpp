#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "conformal/cartan.hpp"
#include "conformal/riemannian.hpp"

namespace conformal {

/// Causal type of a vector under <x,x> = 2 x_0 x_{n+1} + sum x_i^2.
enum class CausalType { Timelike, Spacelike, Null };

const char* to_string(CausalType type);

/// A linear subspace of a matrix space, held as a pivot-reduced basis.
///
/// Basis matrices are normalised so that their pivot entry (the largest in
/// absolute value at reduction time) equals one, and each basis matrix
/// vanishes at the pivots of its predecessors. Instances are immutable.
class MatrixSubspace {
public:
  MatrixSubspace(int rows, int cols, double tol_rel, double threshold,
                 std::vector<Eigen::VectorXd> reduced_rows, std::vector<int> pivots,
                 std::vector<int> round_dims = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return static_cast<int>(reduced_.size()); }

  /// Basis matrices in insertion order.
  std::vector<Eigen::MatrixXd> basis() const;

  /// Absolute pivot threshold frozen at reduction time.
  double threshold() const { return threshold_; }

  /// max-abs remainder of `m` after elimination against the basis.
  double reduce_residual(const Eigen::MatrixXd& m) const;

  /// Whether `m` lies in the span at the stored tolerance.
  bool is_member(const Eigen::MatrixXd& m) const;

  /// Whether the commutator of every basis pair stays in the span.
  bool closed_under_bracket() const;

  /// Dimension after each closure round; empty for plain spans.
  const std::vector<int>& round_dims() const { return round_dims_; }

private:
  int rows_;
  int cols_;
  double tol_rel_;
  double threshold_;
  std::vector<Eigen::VectorXd> reduced_; ///< flattened basis rows
  std::vector<int> pivots_;
  std::vector<int> round_dims_;
};

/// Span of a matrix list by row reduction with partial pivoting; rows whose
/// pivot falls below tol * max-abs(input) are dropped.
MatrixSubspace span_reduce(const std::vector<Eigen::MatrixXd>& mats, double tol);

/// Smallest subspace containing `seed` and stable under bracketing with the
/// generators: the fixed point of  h -> h + [generators, h].
/// Brackets among h elements are not added during iteration; closedness of
/// the limit is asserted afterwards. Throws NoConvergenceError if the
/// dimension still grows after k(k-1)/2 rounds (k the ambient matrix size)
/// or the limit fails the closedness check.
MatrixSubspace bracket_closure(const std::vector<Eigen::MatrixXd>& seed,
                               const std::vector<Eigen::MatrixXd>& generators,
                               double tol);

/// Holonomy algebra of the normal connection inside so(1, n+1):
/// seed q = span{kappa(e_i, e_j)}, generators (id + gamma)(e_i).
MatrixSubspace conformal_holonomy(const ConnectionForm& gamma,
                                  const CurvatureFunction& kappa, double tol = 1e-9);

/// Holonomy algebra of the Levi-Civita connection inside so(n):
/// seed span{R(e_i, e_j)}, generators gamma0(e_i).
MatrixSubspace riemannian_holonomy(const TransferredBracket& rho,
                                   const CurvatureOperator& riemann, double tol = 1e-9);

/// Joint kernel of a matrix subspace acting on column vectors, with each
/// kernel basis vector classified by its causal type.
struct TractorSpace {
  std::vector<Eigen::VectorXd> basis;
  std::vector<CausalType> causal_types;
};

TractorSpace stabilized_tractors(const MatrixSubspace& hol, double tol = 1e-9);

/// Summary of a holonomy computation in so(1, n+1).
struct HolonomyReport {
  int algebra_dim = 0;
  bool closed_under_bracket = false;
  int stabilized_tractor_dim = 0;
  std::vector<CausalType> tractor_causal_types;
  /// Signature (positive, negative, zero) of the ambient trace form
  /// restricted to the subalgebra.
  std::array<int, 3> killing_signature{0, 0, 0};
  /// "trivial", "so(n+1)", "so(1,n+1)" when the rule table applies, else "".
  std::string candidate_name;
};

/// Fills the report for a bracket-closed subspace of so(1, n+1).
/// Throws ContractViolationError when the input is not closed.
HolonomyReport classify(const MatrixSubspace& hol, double tol = 1e-9);

} // namespace conformal
