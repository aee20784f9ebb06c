#include "conformal/cartan.hpp"

#include <cmath>
#include <utility>

namespace conformal {

ConnectionForm::ConnectionForm(std::vector<Eigen::MatrixXd> gamma0,
                               std::vector<Eigen::VectorXd> gamma1)
    : n_(static_cast<int>(gamma0.size())), gamma0_(std::move(gamma0)),
      gamma1_(std::move(gamma1)) {
  if (n_ == 0)
    throw InputError("connection form needs at least one basis vector");
  if (static_cast<int>(gamma1_.size()) != n_)
    throw InputError("gamma0 and gamma1 lists must have equal length");
  for (const auto& g : gamma0_) {
    if (g.rows() != n_ || g.cols() != n_)
      throw InputError("gamma0 entries must be n x n");
    const double mag = g.cwiseAbs().maxCoeff();
    if ((g + g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, mag))
      throw InputError("gamma0 entries must be antisymmetric");
  }
  for (const auto& l : gamma1_)
    if (l.size() != n_)
      throw InputError("gamma1 entries must have length n");
}

Eigen::MatrixXd ConnectionForm::gamma0_of(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw InputError("vector length does not match the connection dimension");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (x(i) != 0.0)
      out += x(i) * gamma0_[static_cast<std::size_t>(i)];
  return out;
}

Eigen::VectorXd ConnectionForm::gamma1_of(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw InputError("vector length does not match the connection dimension");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    if (x(i) != 0.0)
      out += x(i) * gamma1_[static_cast<std::size_t>(i)];
  return out;
}

double normal_lambda(int n) {
  if (n < 3)
    throw InputError("the conformal model requires dimension n >= 3");
  return -1.0 / (8.0 * (n - 1));
}

ConnectionForm normal_connection(const TransferredBracket& rho) {
  const int n = rho.n();
  const double lambda = normal_lambda(n);
  std::vector<Eigen::MatrixXd> gamma0;
  std::vector<Eigen::VectorXd> gamma1;
  gamma0.reserve(static_cast<std::size_t>(n));
  gamma1.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    gamma0.push_back(0.5 * rho.ad_matrix(i));
    gamma1.push_back(lambda * dual_star(Eigen::VectorXd::Unit(n, i)));
  }
  return ConnectionForm(std::move(gamma0), std::move(gamma1));
}

CurvatureFunction::CurvatureFunction(int n, std::vector<MobiusElement> upper)
    : n_(n), upper_(std::move(upper)) {
  if (static_cast<int>(upper_.size()) != pair_count(n_))
    throw InputError("curvature table size does not match the dimension");
}

MobiusElement CurvatureFunction::kappa(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InputError("basis index out of range");
  if (i == j)
    return MobiusElement::zero(n_);
  if (i < j)
    return upper_[static_cast<std::size_t>(pair_index(i, j, n_))];
  return -1.0 * upper_[static_cast<std::size_t>(pair_index(j, i, n_))];
}

Eigen::VectorXd CurvatureFunction::minus1_part(int i, int j) const {
  return grade_project(kappa(i, j)).m_minus1;
}

Eigen::MatrixXd CurvatureFunction::zero_part_rotation(int i, int j) const {
  return grade_project(kappa(i, j)).p0_rotation;
}

double CurvatureFunction::zero_part_scale(int i, int j) const {
  return grade_project(kappa(i, j)).p0_scale;
}

Eigen::VectorXd CurvatureFunction::one_part(int i, int j) const {
  return grade_project(kappa(i, j)).m_1;
}

double CurvatureFunction::minus1_max() const {
  double m = 0.0;
  for (const auto& k : upper_) {
    const auto parts = grade_project(k);
    if (parts.m_minus1.size() > 0)
      m = std::max(m, parts.m_minus1.cwiseAbs().maxCoeff());
  }
  return m;
}

double CurvatureFunction::zero_max() const {
  double m = 0.0;
  for (const auto& k : upper_) {
    const auto parts = grade_project(k);
    m = std::max({m, parts.p0_rotation.cwiseAbs().maxCoeff(), std::abs(parts.p0_scale)});
  }
  return m;
}

double CurvatureFunction::one_max() const {
  double m = 0.0;
  for (const auto& k : upper_) {
    const auto parts = grade_project(k);
    if (parts.m_1.size() > 0)
      m = std::max(m, parts.m_1.cwiseAbs().maxCoeff());
  }
  return m;
}

double CurvatureFunction::max_abs() const {
  double m = 0.0;
  for (const auto& k : upper_)
    m = std::max(m, k.max_abs());
  return m;
}

CurvatureFunction connection_curvature(const ConnectionForm& gamma,
                                       const TransferredBracket& rho) {
  const int n = rho.n();
  if (gamma.n() != n)
    throw InputError("connection and bracket dimensions do not match");

  // (id + gamma)(e_i) in the matrix realisation
  std::vector<MobiusElement> hat;
  hat.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    hat.push_back(embed_m_minus1(Eigen::VectorXd::Unit(n, i)) +
                  embed_p0(gamma.gamma0(i), 0.0) + embed_m1(gamma.gamma1(i)));

  std::vector<MobiusElement> upper;
  upper.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd r = rho.rho(i, j);
      MobiusElement value = mobius_bracket(hat[static_cast<std::size_t>(i)],
                                           hat[static_cast<std::size_t>(j)]);
      value -= embed_m_minus1(r);
      value -= embed_p0(gamma.gamma0_of(r), 0.0);
      value -= embed_m1(gamma.gamma1_of(r));
      upper.push_back(std::move(value));
    }
  return CurvatureFunction(n, std::move(upper));
}

double torsion_residual(const ConnectionForm& gamma, const TransferredBracket& rho) {
  const int n = rho.n();
  if (gamma.n() != n)
    throw InputError("connection and bracket dimensions do not match");
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd defect =
          rho.rho(i, j) + gamma.gamma0(j).col(i) - gamma.gamma0(i).col(j);
      residual = std::max(residual, defect.cwiseAbs().maxCoeff());
    }
  return residual;
}

double trace_free_residual(const CurvatureFunction& kappa) {
  const int n = kappa.n();
  // cache the graded 0-parts once
  std::vector<Eigen::MatrixXd> rot(static_cast<std::size_t>(pair_count(n)));
  std::vector<double> scale(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto parts = grade_project(kappa.kappa(i, j));
      rot[static_cast<std::size_t>(pair_index(i, j, n))] = parts.p0_rotation;
      scale[static_cast<std::size_t>(pair_index(i, j, n))] = parts.p0_scale;
    }
  const auto rot_at = [&](int i, int a) -> Eigen::MatrixXd {
    if (i == a)
      return Eigen::MatrixXd::Zero(n, n);
    if (i < a)
      return rot[static_cast<std::size_t>(pair_index(i, a, n))];
    return -rot[static_cast<std::size_t>(pair_index(a, i, n))];
  };
  const auto scale_at = [&](int i, int a) -> double {
    if (i == a)
      return 0.0;
    if (i < a)
      return scale[static_cast<std::size_t>(pair_index(i, a, n))];
    return -scale[static_cast<std::size_t>(pair_index(a, i, n))];
  };

  double residual = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double trace = 0.0;
      for (int i = 0; i < n; ++i) {
        // kappa0(e_i, e_a) acting on e_b, coordinate i
        trace += rot_at(i, a)(i, b);
        if (i == b)
          trace += scale_at(i, a);
      }
      residual = std::max(residual, std::abs(trace));
    }
  return residual;
}

double jacobi_gamma0_residual(const std::vector<Eigen::MatrixXd>& gamma0) {
  const int n = static_cast<int>(gamma0.size());
  const auto gamma0_of = [&](const Eigen::VectorXd& v) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int t = 0; t < n; ++t)
      if (v(t) != 0.0)
        out += v(t) * gamma0[static_cast<std::size_t>(t)];
    return out;
  };
  // gamma0(rho_{gamma0}(e_i, e_j)) - [gamma0(e_i), gamma0(e_j)]
  const auto term = [&](int i, int j) {
    const Eigen::VectorXd induced = -gamma0[static_cast<std::size_t>(j)].col(i) +
                                    gamma0[static_cast<std::size_t>(i)].col(j);
    return Eigen::MatrixXd(gamma0_of(induced) -
                           (gamma0[static_cast<std::size_t>(i)] * gamma0[static_cast<std::size_t>(j)] -
                            gamma0[static_cast<std::size_t>(j)] * gamma0[static_cast<std::size_t>(i)]));
  };
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd sum = term(i, j) * Eigen::VectorXd::Unit(n, k);
        sum += term(j, k) * Eigen::VectorXd::Unit(n, i);
        sum += term(k, i) * Eigen::VectorXd::Unit(n, j);
        residual = std::max(residual, sum.cwiseAbs().maxCoeff());
      }
  return residual;
}

namespace {

// [m, l] = (m l^T - (m l^T)^T, <l, m>) per the commutator table
struct P0Value {
  Eigen::MatrixXd rotation;
  double scale;
};

P0Value bracket_m_m1(const Eigen::VectorXd& m, const Eigen::VectorXd& l) {
  const Eigen::MatrixXd outer = m * l.transpose();
  return P0Value{outer - outer.transpose(), l.dot(m)};
}

double apply_p0_coord(const P0Value& p, const Eigen::VectorXd& b, int i) {
  return p.rotation.row(i).dot(b) + p.scale * b(i);
}

} // namespace

double normal_extension_residual(const ConnectionForm& gamma) {
  const int n = gamma.n();
  double residual = 0.0;
  for (int a = 0; a < n; ++a) {
    const Eigen::VectorXd ea = Eigen::VectorXd::Unit(n, a);
    for (int b = 0; b < n; ++b) {
      const Eigen::VectorXd eb = Eigen::VectorXd::Unit(n, b);
      double lhs = 0.0;
      double rhs = 0.0;
      for (int i = 0; i < n; ++i) {
        const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
        // [e_i, gamma1(a)] + [gamma1(e_i), a], evaluated on b, coordinate i
        P0Value p = bracket_m_m1(ei, gamma.gamma1(a));
        const P0Value q = bracket_m_m1(ea, gamma.gamma1(i));
        p.rotation -= q.rotation;
        p.scale -= q.scale;
        lhs += apply_p0_coord(p, eb, i);

        // gamma0([e_i, gamma0(a)] + [gamma0(e_i), a]) - [gamma0(e_i), gamma0(a)]
        const Eigen::VectorXd inner = -gamma.gamma0_of(ea) * ei + gamma.gamma0(i) * ea;
        const Eigen::MatrixXd first = gamma.gamma0_of(inner);
        const Eigen::MatrixXd second =
            gamma.gamma0(i) * gamma.gamma0_of(ea) - gamma.gamma0_of(ea) * gamma.gamma0(i);
        rhs += (first - second).row(i).dot(eb);
      }
      residual = std::max(residual, std::abs(lhs - rhs));
    }
  }
  return residual;
}

} // namespace conformal
