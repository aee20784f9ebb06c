#pragma once

#include <string>

#include <Eigen/Dense>

#include "conformal/holonomy.hpp"
#include "conformal/lie_algebra.hpp"

namespace conformal {

struct AnalysisOptions {
  double tolerance = 1e-9; ///< rank / validation tolerance
};

struct ResidualSet {
  double jacobi = 0.0;
  double torsion = 0.0;
  double trace_free = 0.0;
  double gamma0_jacobi = 0.0;
  double normal_extension = 0.0;
  double weyl_cross_check = 0.0;
};

struct RiemannianSummary {
  double scal = 0.0;
  double einstein_residual = 0.0; ///< max-abs of Ric - (1/4) I
  double sectional_min = 0.0;
  double sectional_max = 0.0;
};

struct CurvatureSummary {
  int dim_q = 0; ///< dimension of the span of curvature values
  double kappa_minus1_max = 0.0;
  double kappa1_max = 0.0;
};

/// Aggregated output of the full pipeline for one algebra.
struct AnalysisReport {
  std::string algebra_name;
  int dim = 0;
  Eigen::MatrixXd theta;
  double lambda = 0.0;
  ResidualSet residuals;
  RiemannianSummary riemannian;
  CurvatureSummary curvature;
  HolonomyReport holonomy;
  int riemannian_holonomy_dim = 0;
};

/// Runs validation, frame construction, normal connection, curvature, metric
/// tensors and both holonomy closures. Throws InvalidAlgebraError /
/// NotSemisimpleError for rejected inputs and NoConvergenceError on numerical
/// failure of a closure.
AnalysisReport run_analysis(const LieAlgebraSpec& alg, const AnalysisOptions& options = {});

} // namespace conformal
