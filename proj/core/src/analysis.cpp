#include "conformal/analysis.hpp"

#include <algorithm>

#include "conformal/algebra_io.hpp"

namespace conformal {

AnalysisReport run_analysis(const LieAlgebraSpec& alg, const AnalysisOptions& options) {
  const double tol = options.tolerance;

  AnalysisReport report;
  report.algebra_name = alg.name();
  report.dim = alg.dim();

  const JacobiCheck jacobi = jacobi_check(alg);
  report.residuals.jacobi = jacobi.residual;
  const KillingForm killing = assert_compact_semisimple(alg, tol);

  const OrthonormalFrame frame = orthonormal_frame(killing, tol);
  report.theta = frame.theta;
  const TransferredBracket rho = transferred_bracket(alg, frame);

  const ConnectionForm gamma = normal_connection(rho);
  report.lambda = gamma.gamma1(0)(0);
  const CurvatureFunction kappa = connection_curvature(gamma, rho);

  report.residuals.torsion = torsion_residual(gamma, rho);
  report.residuals.trace_free = trace_free_residual(kappa);
  report.residuals.gamma0_jacobi = jacobi_gamma0_residual(gamma.gamma0_list());
  report.residuals.normal_extension = normal_extension_residual(gamma);
  report.curvature.kappa_minus1_max = kappa.minus1_max();
  report.curvature.kappa1_max = kappa.one_max();

  const CurvatureOperator r = riemann(rho);
  const MetricTensors tensors = metric_tensors(rho);
  report.residuals.weyl_cross_check = weyl_cross_check(kappa, tensors.weyl);
  report.riemannian.scal = tensors.scal;
  report.riemannian.einstein_residual =
      (tensors.ric - 0.25 * Eigen::MatrixXd::Identity(alg.dim(), alg.dim()))
          .cwiseAbs()
          .maxCoeff();
  bool first = true;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      const double s = sectional(rho, Eigen::VectorXd::Unit(alg.dim(), i),
                                 Eigen::VectorXd::Unit(alg.dim(), j));
      if (first) {
        report.riemannian.sectional_min = s;
        report.riemannian.sectional_max = s;
        first = false;
      } else {
        report.riemannian.sectional_min = std::min(report.riemannian.sectional_min, s);
        report.riemannian.sectional_max = std::max(report.riemannian.sectional_max, s);
      }
    }

  const MatrixSubspace hol = conformal_holonomy(gamma, kappa, tol);
  report.curvature.dim_q = hol.round_dims().empty() ? 0 : hol.round_dims().front();
  report.holonomy = classify(hol, tol);

  report.riemannian_holonomy_dim = riemannian_holonomy(rho, r, tol).dim();
  return report;
}

} // namespace conformal
