#pragma once

#include <Eigen/Dense>

#include "conformal/errors.hpp"

namespace conformal {

/// An element of the Moebius algebra so(1, n+1), realised as an
/// (n+2) x (n+2) real matrix.
///
/// Row/column slots are ordered: the x_0 slot, the n Euclidean slots, the
/// x_{n+1} slot, for the quadratic form <x,x> = 2 x_0 x_{n+1} + sum x_i^2.
/// The algebra carries the |1|-grading  m_{-1} + co(n) + m_1  with block
/// pictures
///
///   ( 0  0  0 )          ( -a  0  0 )         ( 0   l   0  )
///   ( m  0  0 ),         (  0  A  0 ),        ( 0   0  -l^T),
///   ( 0 -m^T 0 )         (  0  0  a )         ( 0   0   0  )
///
/// where A is an antisymmetric n x n matrix. The matrix realisation is
/// authoritative; graded parts are views extracted from the blocks.
class MobiusElement {
public:
  MobiusElement(int n, Eigen::MatrixXd matrix);

  static MobiusElement zero(int n);

  int n() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  double max_abs() const { return matrix_.cwiseAbs().maxCoeff(); }

  MobiusElement& operator+=(const MobiusElement& other);
  MobiusElement& operator-=(const MobiusElement& other);
  MobiusElement& operator*=(double s);

private:
  int n_;
  Eigen::MatrixXd matrix_;
};

MobiusElement operator+(MobiusElement a, const MobiusElement& b);
MobiusElement operator-(MobiusElement a, const MobiusElement& b);
MobiusElement operator*(double s, MobiusElement a);

/// Block read-off of a Moebius element: an m_{-1} vector, the co(n) pair
/// (rotation, scale) and an m_1 covector (stored by its dual-basis
/// coordinates).
struct GradedParts {
  Eigen::VectorXd m_minus1;
  Eigen::MatrixXd p0_rotation;
  double p0_scale = 0.0;
  Eigen::VectorXd m_1;
};

/// Gram matrix J of <x,x> = 2 x_0 x_{n+1} + sum x_i^2.
Eigen::MatrixXd minkowski_gram(int n);

/// max-abs of X^T J + J X; zero exactly on so(1, n+1).
double so_membership_residual(const MobiusElement& x);

MobiusElement embed_m_minus1(const Eigen::VectorXd& m);

/// Throws InputError unless `rotation` is antisymmetric.
MobiusElement embed_p0(const Eigen::MatrixXd& rotation, double scale);

MobiusElement embed_m1(const Eigen::VectorXd& l);

/// Convenience: embed_m_minus1(m) + embed_p0(rotation, scale) + embed_m1(l).
MobiusElement embed_graded(const GradedParts& parts);

/// Extracts the graded parts. Throws InputError when the membership residual
/// exceeds tol * max(1, max-abs of x). For exact members the round trip
/// through embed_graded is bitwise.
GradedParts grade_project(const MobiusElement& x, double tol = 1e-9);

/// Matrix commutator X Y - Y X.
MobiusElement mobius_bracket(const MobiusElement& x, const MobiusElement& y);

/// Coordinate dual m_{-1} -> m_1: (sum a_i e_i)* = sum a_i e_i*.
Eigen::VectorXd dual_star(const Eigen::VectorXd& a);

} // namespace conformal
