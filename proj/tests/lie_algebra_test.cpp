#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conformal/lie_algebra.hpp"
#include "test_util.hpp"

using namespace conformal;

namespace {

// sl(2,R) in the basis (e, f, h): [e,f] = h, [e,h] = -2e, [f,h] = 2f
LieAlgebraSpec sl2r() {
  std::vector<Eigen::VectorXd> table(3, Eigen::VectorXd::Zero(3));
  table[pair_index(0, 1, 3)] = Eigen::Vector3d(0, 0, 1);
  table[pair_index(0, 2, 3)] = Eigen::Vector3d(-2, 0, 0);
  table[pair_index(1, 2, 3)] = Eigen::Vector3d(0, 2, 0);
  return LieAlgebraSpec("sl(2,R)", 3, table);
}

LieAlgebraSpec abelian(int n) {
  return LieAlgebraSpec("abelian", n,
                        std::vector<Eigen::VectorXd>(pair_count(n), Eigen::VectorXd::Zero(n)));
}

} // namespace

TEST_CASE("so(3) basis bracket matches the matrix commutator") {
  const auto alg = catalog("so(3)");
  // [E_12, E_13] = -E_23 in the standard basis (E_12, E_13, E_23)
  const Eigen::VectorXd result =
      bracket(alg, Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0));
  CHECK((result - Eigen::Vector3d(0, 0, -1)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  const auto alg = catalog("so(5)");
  auto gen = test_util::engine(101);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd x = test_util::random_vector(alg.dim(), gen);
    const Eigen::VectorXd y = test_util::random_vector(alg.dim(), gen);
    CHECK(bracket(alg, x, x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((bracket(alg, x, y) + bracket(alg, y, x)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((bracket(alg, x + y, y) - bracket(alg, x, y)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("direct-sum blocks commute") {
  const auto alg = catalog("so(3)+so(3)");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(6);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(6);
  x.head(3) = Eigen::Vector3d(0.3, -1.0, 2.0);
  y.tail(3) = Eigen::Vector3d(1.0, 0.5, -0.25);
  CHECK(bracket(alg, x, y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bracket rejects mismatched dimensions") {
  const auto alg = catalog("so(3)");
  CHECK_THROWS_AS(bracket(alg, Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(3)),
                  InputError);
}

TEST_CASE("Killing form golden values") {
  const Eigen::MatrixXd b3 = killing_form(catalog("so(3)")).matrix;
  CHECK((b3 + 2.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);

  const Eigen::MatrixXd b33 = killing_form(catalog("so(3)+so(3)")).matrix;
  CHECK((b33 + 2.0 * Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-13);

  // su(2): -4 times the Gram matrix of the basis, which is 2 I
  const Eigen::MatrixXd bsu2 = killing_form(catalog("su(2)")).matrix;
  CHECK((bsu2 + 8.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Killing form is ad-invariant and symmetric") {
  for (const char* name : {"so(4)", "su(3)"}) {
    const auto alg = catalog(name);
    const Eigen::MatrixXd b = killing_form(alg).matrix;
    CHECK((b - b.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    auto gen = test_util::engine(202);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXd x = test_util::random_vector(alg.dim(), gen);
      const Eigen::VectorXd y = test_util::random_vector(alg.dim(), gen);
      CHECK(std::abs(bracket(alg, x, y).dot(b * y)) < 1e-10 * b.cwiseAbs().maxCoeff() *
                                                          x.norm() * y.norm());
    }
    // residual over basis triples: B([x,y],z) = B(x,[y,z])
    double residual = 0.0;
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j)
        for (int k = 0; k < alg.dim(); ++k) {
          const double lhs = alg.basis_bracket(i, j).dot(b.col(k));
          const double rhs = b.row(i).dot(alg.basis_bracket(j, k));
          residual = std::max(residual, std::abs(lhs - rhs));
        }
    CHECK(residual < 1e-10);
  }
}

TEST_CASE("Jacobi residual of exact algebras is tiny") {
  CHECK(jacobi_residual(catalog("so(4)")) < 1e-12);
  CHECK(jacobi_residual(catalog("su(3)")) < 1e-12);
}

TEST_CASE("Jacobi residual of a Heisenberg-like tensor is zero") {
  std::vector<Eigen::VectorXd> table(3, Eigen::VectorXd::Zero(3));
  table[pair_index(0, 1, 3)] = Eigen::Vector3d(0, 0, 1);
  const LieAlgebraSpec alg("heisenberg", 3, table);
  CHECK(jacobi_residual(alg) == 0.0);
}

TEST_CASE("Jacobi violation is detected with the worst triple") {
  // c[0][1][1] = 1 and c[1][2][0] = 1: the cyclic sum equals b_0
  std::vector<Eigen::VectorXd> table(3, Eigen::VectorXd::Zero(3));
  table[pair_index(0, 1, 3)] = Eigen::Vector3d(0, 1, 0);
  table[pair_index(1, 2, 3)] = Eigen::Vector3d(1, 0, 0);
  const LieAlgebraSpec alg("broken", 3, table);
  const JacobiCheck check = jacobi_check(alg);
  CHECK(check.residual == doctest::Approx(1.0));
  CHECK(check.worst_triple == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("compact-semisimple validation") {
  CHECK_NOTHROW(assert_compact_semisimple(catalog("so(5)"), 1e-9));
  CHECK_THROWS_AS(assert_compact_semisimple(abelian(1), 1e-9), NotSemisimpleError);
  CHECK_THROWS_AS(assert_compact_semisimple(sl2r(), 1e-9), NotSemisimpleError);

  std::vector<Eigen::VectorXd> table(3, Eigen::VectorXd::Zero(3));
  table[pair_index(0, 1, 3)] = Eigen::Vector3d(0, 1, 0);
  table[pair_index(1, 2, 3)] = Eigen::Vector3d(1, 0, 0);
  CHECK_THROWS_AS(assert_compact_semisimple(LieAlgebraSpec("broken", 3, table), 1e-9),
                  InvalidAlgebraError);
}

TEST_CASE("direct sums") {
  const auto a = catalog("so(3)");
  const auto sum = direct_sum(a, a);
  CHECK(sum.dim() == 6);

  const Eigen::MatrixXd b = killing_form(sum).matrix;
  const Eigen::MatrixXd ba = killing_form(a).matrix;
  CHECK((b.topLeftCorner(3, 3) - ba).cwiseAbs().maxCoeff() == 0.0);
  CHECK((b.bottomRightCorner(3, 3) - ba).cwiseAbs().maxCoeff() == 0.0);
  CHECK(b.topRightCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);

  const auto triple = catalog("so(3)+so(3)+so(3)");
  CHECK(triple.dim() == 9);
  CHECK(jacobi_residual(triple) < 1e-12);
}

TEST_CASE("catalog names and rejection") {
  CHECK(catalog("so(4)").dim() == 6);
  CHECK(catalog("su(3)").dim() == 8);
  CHECK(catalog(" so(3) + so(3) ").dim() == 6);
  CHECK_THROWS_AS(catalog("so(2)"), UnknownAlgebraError);
  CHECK_THROWS_AS(catalog("su(1)"), UnknownAlgebraError);
  CHECK_THROWS_AS(catalog("sp(4)"), UnknownAlgebraError);
  CHECK_THROWS_AS(catalog("so(x)"), UnknownAlgebraError);
  CHECK_THROWS_AS(catalog(""), UnknownAlgebraError);
  CHECK_THROWS_AS(catalog("so(12)"), InputError); // dim 66 over the dense limit
  for (const auto& name : catalog_names())
    CHECK_NOTHROW(catalog(name));
}

TEST_CASE("catalog so(4) Killing data matches the direct-sum presentation") {
  // intrinsically B = -4 I in the E_ij basis; definite with the same signature
  // as so(3)+so(3)
  const Eigen::MatrixXd b = killing_form(catalog("so(4)")).matrix;
  CHECK((b + 4.0 * Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_NOTHROW(assert_compact_semisimple(catalog("so(4)"), 1e-9));
}

TEST_CASE("orthonormal frame of so(3) is sqrt(2) times the identity") {
  const auto frame = orthonormal_frame(killing_form(catalog("so(3)")));
  CHECK((frame.theta - std::sqrt(2.0) * Eigen::MatrixXd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  const auto frame6 = orthonormal_frame(killing_form(catalog("so(3)+so(3)")));
  CHECK((frame6.theta - std::sqrt(2.0) * Eigen::MatrixXd::Identity(6, 6))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("orthonormal frame is an isometry and deterministic") {
  for (const char* name : {"so(4)", "su(3)", "so(5)"}) {
    const auto killing = killing_form(catalog(name));
    const auto frame = orthonormal_frame(killing);
    const int n = static_cast<int>(frame.theta.rows());
    const Eigen::MatrixXd gram =
        frame.theta_inv.transpose() * (-killing.matrix) * frame.theta_inv;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);

    const auto again = orthonormal_frame(killing);
    CHECK((frame.theta - again.theta).cwiseAbs().maxCoeff() == 0.0);
    CHECK((frame.theta_inv - again.theta_inv).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(orthonormal_frame(killing_form(sl2r())), NotSemisimpleError);
}

TEST_CASE("transferred bracket of so(3)") {
  const auto alg = catalog("so(3)");
  const auto rho = transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
  // rho(e_1, e_2) = -(1/sqrt 2) e_3
  const Eigen::Vector3d expected(0, 0, -1.0 / std::sqrt(2.0));
  CHECK((rho.rho(0, 1) - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(rho.rho(1, 0).isApprox(-rho.rho(0, 1)));
}

TEST_CASE("transferred bracket is skew for the transported inner product") {
  for (const char* name : {"so(4)", "su(3)"}) {
    const auto alg = catalog(name);
    const auto rho = transferred_bracket(alg, orthonormal_frame(killing_form(alg)));
    const int n = rho.n();
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXd ad = rho.ad_matrix(i);
      residual = std::max(residual, (ad + ad.transpose()).cwiseAbs().maxCoeff());
    }
    CHECK(residual < 1e-10);
    // rho(a, a) = 0
    auto gen = test_util::engine(303);
    const Eigen::VectorXd a = test_util::random_vector(n, gen);
    CHECK(rho.apply(a, a).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("transferred bracket validates the frame") {
  const auto alg = catalog("so(3)");
  OrthonormalFrame bogus;
  bogus.theta = Eigen::MatrixXd::Identity(3, 3); // not an isometry for -B = 2I
  bogus.theta_inv = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(transferred_bracket(alg, bogus), InputError);
}
