#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conformal/cartan.hpp"
#include "conformal/holonomy.hpp"
#include "test_util.hpp"

using namespace conformal;

namespace {

TransferredBracket bracket_of(const std::string& name) {
  const auto alg = catalog(name);
  return transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
}

// E_ij = e_i e_j^T - e_j e_i^T as an n x n matrix (0-based indices)
Eigen::MatrixXd unit_rotation(int n, int i, int j) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  e(i, j) = 1.0;
  e(j, i) = -1.0;
  return e;
}

std::vector<Eigen::VectorXd> zero_gamma1(int n) {
  return std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(n));
}

} // namespace

TEST_CASE("normal connection of so(3) matches the closed form") {
  const auto rho = bracket_of("so(3)");
  const ConnectionForm gamma = normal_connection(rho);
  const double c = 1.0 / (2.0 * std::sqrt(2.0));

  CHECK((gamma.gamma0(0) - c * unit_rotation(3, 1, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((gamma.gamma0(1) + c * unit_rotation(3, 0, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((gamma.gamma0(2) - c * unit_rotation(3, 0, 1)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK(normal_lambda(3) == -1.0 / 16.0);
  for (int i = 0; i < 3; ++i)
    CHECK((gamma.gamma1(i) + (1.0 / 16.0) * Eigen::VectorXd::Unit(3, i))
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("normal connection of so(3)+so(3)") {
  const auto rho = bracket_of("so(3)+so(3)");
  const ConnectionForm gamma = normal_connection(rho);
  CHECK(normal_lambda(6) == doctest::Approx(-1.0 / 40.0).epsilon(1e-15));
  for (int i = 0; i < 6; ++i)
    CHECK((gamma.gamma1(i) - normal_lambda(6) * Eigen::VectorXd::Unit(6, i))
              .cwiseAbs()
              .maxCoeff() == 0.0);

  // second-block generator: same magnitude pattern as the first block
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  CHECK(std::abs(std::abs(gamma.gamma0(3)(4, 5)) - c) < 1e-15);
  Eigen::MatrixXd masked = gamma.gamma0(3);
  masked(4, 5) = 0.0;
  masked(5, 4) = 0.0;
  CHECK(masked.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("normal connection requires n >= 3") {
  const TransferredBracket tiny(2, {Eigen::VectorXd::Zero(2)});
  CHECK_THROWS_AS(normal_connection(tiny), InputError);
  CHECK_THROWS_AS(normal_lambda(2), InputError);
}

TEST_CASE("connection form validates antisymmetry") {
  std::vector<Eigen::MatrixXd> gamma0(3, Eigen::MatrixXd::Ones(3, 3));
  CHECK_THROWS_AS(ConnectionForm(gamma0, zero_gamma1(3)), InputError);
}

TEST_CASE("curvature of so(3) vanishes identically") {
  const auto rho = bracket_of("so(3)");
  const CurvatureFunction kappa = connection_curvature(normal_connection(rho), rho);
  CHECK(kappa.max_abs() < 1e-12);
}

TEST_CASE("curvature of so(3)+so(3): graded parts") {
  const auto rho = bracket_of("so(3)+so(3)");
  const CurvatureFunction kappa = connection_curvature(normal_connection(rho), rho);
  CHECK(kappa.minus1_max() < 1e-12);
  CHECK(kappa.one_max() < 1e-12);
  CHECK(kappa.zero_max() > 1e-3);

  // in-block value: kappa0(e_1, e_2) = (1/8 - 1/20) E_12
  const Eigen::MatrixXd k01 = kappa.zero_part_rotation(0, 1);
  CHECK((k01 - (3.0 / 40.0) * unit_rotation(6, 0, 1)).cwiseAbs().maxCoeff() < 1e-12);
  // cross-block value: kappa0(e_1, e_4) = -(1/20) E_14
  const Eigen::MatrixXd k03 = kappa.zero_part_rotation(0, 3);
  CHECK((k03 + (1.0 / 20.0) * unit_rotation(6, 0, 3)).cwiseAbs().maxCoeff() < 1e-12);
  // scale parts of kappa0 vanish
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      CHECK(std::abs(kappa.zero_part_scale(i, j)) < 1e-12);

  CHECK(kappa.kappa(1, 0).matrix().isApprox(-kappa.kappa(0, 1).matrix()));
}

TEST_CASE("degenerate zero bracket has zero curvature") {
  const int n = 4;
  const TransferredBracket rho(n, std::vector<Eigen::VectorXd>(pair_count(n),
                                                               Eigen::VectorXd::Zero(n)));
  const ConnectionForm gamma(std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)),
                             zero_gamma1(n));
  CHECK(connection_curvature(gamma, rho).max_abs() == 0.0);
}

TEST_CASE("torsion residual") {
  for (const char* name : {"so(3)", "so(4)", "su(3)"}) {
    const auto rho = bracket_of(name);
    CHECK(torsion_residual(normal_connection(rho), rho) < 1e-12);
  }

  // gamma0 = 0 leaves the full bracket as torsion
  const auto rho = bracket_of("so(4)");
  const int n = rho.n();
  const ConnectionForm flat(std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)),
                            zero_gamma1(n));
  CHECK(torsion_residual(flat, rho) == doctest::Approx(rho.max_abs()));
}

TEST_CASE("perturbed torsion-free maps regain torsion") {
  const auto rho = bracket_of("so(4)");
  const ConnectionForm gamma = normal_connection(rho);
  const int n = rho.n();
  auto gen = test_util::engine(111);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXd a = test_util::random_matrix(n, n, gen);
    std::vector<Eigen::MatrixXd> perturbed;
    for (int i = 0; i < n; ++i)
      perturbed.push_back(gamma.gamma0(i) - gamma.gamma0_of(a.col(i)));
    const ConnectionForm q(perturbed, zero_gamma1(n));
    CHECK(torsion_residual(q, rho) > 1e-6 * test_util::max_abs(a));
  }
}

TEST_CASE("trace-free residual") {
  const auto rho = bracket_of("so(3)+so(3)");
  const ConnectionForm gamma = normal_connection(rho);
  CHECK(trace_free_residual(connection_curvature(gamma, rho)) < 1e-10);

  // dropping gamma1 breaks the trace condition by exactly the Ricci value 1/4
  const int n = rho.n();
  const ConnectionForm no_gamma1(gamma.gamma0_list(), zero_gamma1(n));
  const double residual = trace_free_residual(connection_curvature(no_gamma1, rho));
  CHECK(residual == doctest::Approx(0.25).epsilon(1e-10));

  const CurvatureFunction zero(n, std::vector<MobiusElement>(pair_count(n),
                                                             MobiusElement::zero(n)));
  CHECK(trace_free_residual(zero) == 0.0);
}

TEST_CASE("gamma0 Jacobi-type residual") {
  const auto rho = bracket_of("so(5)");
  CHECK(jacobi_gamma0_residual(normal_connection(rho).gamma0_list()) < 1e-10);

  const std::vector<Eigen::MatrixXd> zeros(4, Eigen::MatrixXd::Zero(4, 4));
  CHECK(jacobi_gamma0_residual(zeros) == 0.0);

  auto gen = test_util::engine(222);
  std::vector<Eigen::MatrixXd> generic;
  for (int i = 0; i < 4; ++i)
    generic.push_back(test_util::random_antisymmetric(4, gen));
  CHECK(jacobi_gamma0_residual(generic) > 1e-3);
}

TEST_CASE("normal-extension residual") {
  for (const char* name : {"so(3)", "so(3)+so(3)", "su(3)"}) {
    const auto rho = bracket_of(name);
    CHECK(normal_extension_residual(normal_connection(rho)) < 1e-10);
  }

  // with gamma1 = 0 the defect is the trace value 1/4 on diagonal pairs
  const auto rho = bracket_of("so(3)+so(3)");
  const ConnectionForm gamma = normal_connection(rho);
  const ConnectionForm no_gamma1(gamma.gamma0_list(), zero_gamma1(rho.n()));
  CHECK(normal_extension_residual(no_gamma1) == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("gamma0 values are derivations with trivial kernel") {
  for (const char* name : {"so(4)", "su(3)"}) {
    const auto rho = bracket_of(name);
    const ConnectionForm gamma = normal_connection(rho);
    const int n = rho.n();

    double residual = 0.0;
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const Eigen::VectorXd lhs = gamma.gamma0(x) * rho.rho(a, b);
          const Eigen::VectorXd rhs =
              rho.apply(gamma.gamma0(x).col(a), Eigen::VectorXd::Unit(n, b)) +
              rho.apply(Eigen::VectorXd::Unit(n, a), gamma.gamma0(x).col(b));
          residual = std::max(residual, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    CHECK(residual < 1e-10);

    // the n matrices gamma0(e_i) are linearly independent
    CHECK(span_reduce(gamma.gamma0_list(), 1e-9).dim() == n);
  }
}

TEST_CASE("curvature 0-part equals the Riemannian operator shifted by gamma1 terms") {
  const auto rho = bracket_of("so(3)+so(3)");
  const ConnectionForm gamma = normal_connection(rho);
  const CurvatureFunction kappa = connection_curvature(gamma, rho);
  const int n = rho.n();
  double residual = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const MobiusElement corr1 = mobius_bracket(
          embed_m_minus1(Eigen::VectorXd::Unit(n, a)), embed_m1(gamma.gamma1(b)));
      const MobiusElement corr2 = mobius_bracket(
          embed_m1(gamma.gamma1(a)), embed_m_minus1(Eigen::VectorXd::Unit(n, b)));
      const GradedParts c1 = grade_project(corr1);
      const GradedParts c2 = grade_project(corr2);
      const Eigen::MatrixXd lhs =
          kappa.zero_part_rotation(a, b) - c1.p0_rotation - c2.p0_rotation;
      const double lhs_scale = kappa.zero_part_scale(a, b) - c1.p0_scale - c2.p0_scale;
      const Eigen::MatrixXd rhs =
          -gamma.gamma0_of(rho.rho(a, b)) +
          (gamma.gamma0(a) * gamma.gamma0(b) - gamma.gamma0(b) * gamma.gamma0(a));
      residual = std::max(residual, (lhs - rhs).cwiseAbs().maxCoeff());
      residual = std::max(residual, std::abs(lhs_scale));
    }
  CHECK(residual < 1e-10);
}
