#include "conformal/holonomy.hpp"

#include <cmath>
#include <utility>

namespace conformal {

const char* to_string(CausalType type) {
  switch (type) {
  case CausalType::Timelike:
    return "timelike";
  case CausalType::Spacelike:
    return "spacelike";
  case CausalType::Null:
    return "null";
  }
  return "unknown";
}

namespace {

// Incremental pivoted row reduction over flattened matrices. Rows are kept
// when their pivot (largest entry by absolute value after elimination)
// exceeds an absolute threshold, and are normalised so the pivot equals one.
// Once inserted, rows never change, so insertion order is the elimination
// order for later rows.
struct Reducer {
  double threshold = 0.0;
  std::vector<Eigen::VectorXd> rows;
  std::vector<int> pivots;

  void eliminate(Eigen::VectorXd& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double c = v(pivots[r]);
      if (c != 0.0)
        v -= c * rows[r];
    }
  }

  double residual(Eigen::VectorXd v) const {
    eliminate(v);
    return v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
  }

  bool try_insert(Eigen::VectorXd v) {
    eliminate(v);
    int pivot = 0;
    const double mag = v.size() > 0 ? v.cwiseAbs().maxCoeff(&pivot) : 0.0;
    if (!(mag > threshold))
      return false;
    v /= v(pivot);
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    return true;
  }
};

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

double list_max_abs(const std::vector<Eigen::MatrixXd>& mats) {
  double m = 0.0;
  for (const auto& x : mats)
    if (x.size() > 0)
      m = std::max(m, x.cwiseAbs().maxCoeff());
  return m;
}

} // namespace

MatrixSubspace::MatrixSubspace(int rows, int cols, double tol_rel, double threshold,
                               std::vector<Eigen::VectorXd> reduced_rows,
                               std::vector<int> pivots, std::vector<int> round_dims)
    : rows_(rows), cols_(cols), tol_rel_(tol_rel), threshold_(threshold),
      reduced_(std::move(reduced_rows)), pivots_(std::move(pivots)),
      round_dims_(std::move(round_dims)) {}

std::vector<Eigen::MatrixXd> MatrixSubspace::basis() const {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(reduced_.size());
  for (const auto& row : reduced_)
    out.push_back(Eigen::Map<const Eigen::MatrixXd>(row.data(), rows_, cols_));
  return out;
}

double MatrixSubspace::reduce_residual(const Eigen::MatrixXd& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw InputError("matrix shape does not match the subspace ambient");
  Eigen::VectorXd v = flatten(m);
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const double c = v(pivots_[r]);
    if (c != 0.0)
      v -= c * reduced_[r];
  }
  return v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
}

bool MatrixSubspace::is_member(const Eigen::MatrixXd& m) const {
  const double mag = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
  return reduce_residual(m) <= std::max(threshold_, tol_rel_ * mag);
}

bool MatrixSubspace::closed_under_bracket() const {
  if (rows_ != cols_)
    throw InputError("bracket closedness needs square matrices");
  const auto mats = basis();
  for (std::size_t a = 0; a < mats.size(); ++a)
    for (std::size_t b = a + 1; b < mats.size(); ++b)
      if (!is_member(mats[a] * mats[b] - mats[b] * mats[a]))
        return false;
  return true;
}

MatrixSubspace span_reduce(const std::vector<Eigen::MatrixXd>& mats, double tol) {
  if (mats.empty())
    return MatrixSubspace(0, 0, tol, 0.0, {}, {});
  const int rows = static_cast<int>(mats.front().rows());
  const int cols = static_cast<int>(mats.front().cols());
  Reducer red;
  red.threshold = tol * list_max_abs(mats);
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols)
      throw InputError("span inputs must share one shape");
    red.try_insert(flatten(m));
  }
  return MatrixSubspace(rows, cols, tol, red.threshold, std::move(red.rows),
                        std::move(red.pivots));
}

MatrixSubspace bracket_closure(const std::vector<Eigen::MatrixXd>& seed,
                               const std::vector<Eigen::MatrixXd>& generators,
                               double tol) {
  if (seed.empty() && generators.empty())
    return MatrixSubspace(0, 0, tol, 0.0, {}, {});
  const int k = static_cast<int>(seed.empty() ? generators.front().rows() : seed.front().rows());
  for (const auto& m : seed)
    if (m.rows() != k || m.cols() != k)
      throw InputError("closure inputs must be square of one shape");
  for (const auto& m : generators)
    if (m.rows() != k || m.cols() != k)
      throw InputError("closure generators must match the seed shape");

  Reducer red;
  red.threshold = tol * std::max(list_max_abs(seed), list_max_abs(generators));

  // basis rows are immutable once inserted, so brackets with generators only
  // have to be expanded against the newest rows of each round
  std::vector<Eigen::MatrixXd> mats;
  std::vector<std::size_t> frontier;
  for (const auto& s : seed)
    if (red.try_insert(flatten(s))) {
      mats.push_back(Eigen::Map<const Eigen::MatrixXd>(red.rows.back().data(), k, k));
      frontier.push_back(mats.size() - 1);
    }

  std::vector<int> rounds{static_cast<int>(red.rows.size())};
  const int max_rounds = k * (k - 1) / 2;
  int round = 0;
  while (!frontier.empty()) {
    if (++round > max_rounds)
      throw NoConvergenceError("bracket closure failed to stabilise after " +
                               std::to_string(max_rounds) + " rounds");
    std::vector<std::size_t> next;
    for (const auto& g : generators)
      for (const std::size_t idx : frontier) {
        const Eigen::MatrixXd comm = g * mats[idx] - mats[idx] * g;
        if (red.try_insert(flatten(comm))) {
          mats.push_back(Eigen::Map<const Eigen::MatrixXd>(red.rows.back().data(), k, k));
          next.push_back(mats.size() - 1);
        }
      }
    frontier = std::move(next);
    rounds.push_back(static_cast<int>(red.rows.size()));
  }

  MatrixSubspace space(k, k, tol, red.threshold, std::move(red.rows),
                       std::move(red.pivots), std::move(rounds));
  if (!space.closed_under_bracket())
    throw NoConvergenceError("bracket closure limit is not closed under the bracket");
  return space;
}

MatrixSubspace conformal_holonomy(const ConnectionForm& gamma,
                                  const CurvatureFunction& kappa, double tol) {
  const int n = gamma.n();
  if (kappa.n() != n)
    throw InputError("connection and curvature dimensions do not match");
  std::vector<Eigen::MatrixXd> seed;
  seed.reserve(kappa.values().size());
  for (const auto& v : kappa.values())
    seed.push_back(v.matrix());
  std::vector<Eigen::MatrixXd> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const MobiusElement lambda = embed_m_minus1(Eigen::VectorXd::Unit(n, i)) +
                                 embed_p0(gamma.gamma0(i), 0.0) +
                                 embed_m1(gamma.gamma1(i));
    gens.push_back(lambda.matrix());
  }
  return bracket_closure(seed, gens, tol);
}

MatrixSubspace riemannian_holonomy(const TransferredBracket& rho,
                                   const CurvatureOperator& riemann, double tol) {
  const int n = rho.n();
  if (riemann.n() != n)
    throw InputError("bracket and curvature dimensions do not match");
  std::vector<Eigen::MatrixXd> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    gens.push_back(0.5 * rho.ad_matrix(i));
  return bracket_closure(riemann.values(), gens, tol);
}

TractorSpace stabilized_tractors(const MatrixSubspace& hol, double tol) {
  const int k = hol.rows();
  if (k != hol.cols())
    throw InputError("tractor computation needs square matrices");
  const int n = k - 2;

  // joint kernel of the basis: row-reduce all matrix rows with the same
  // pivoted elimination, then back-substitute per free column
  Reducer red;
  const auto mats = hol.basis();
  double scale = 0.0;
  for (const auto& m : mats)
    scale = std::max(scale, m.cwiseAbs().maxCoeff());
  red.threshold = tol * scale;
  for (const auto& m : mats)
    for (int r = 0; r < k; ++r)
      red.try_insert(m.row(r).transpose());

  std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
  for (const int p : red.pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;

  TractorSpace out;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(k);
    v(f) = 1.0;
    // each reduced row vanishes at the pivots of its predecessors, so the
    // system is triangular when walked backwards
    for (int r = static_cast<int>(red.rows.size()) - 1; r >= 0; --r) {
      const auto& row = red.rows[static_cast<std::size_t>(r)];
      const int p = red.pivots[static_cast<std::size_t>(r)];
      double s = row.dot(v) - v(p); // row has a unit pivot
      v(p) = -s;
    }
    // causal type under <v,v> = 2 v_0 v_{n+1} + sum v_i^2
    double q = 2.0 * v(0) * v(n + 1);
    for (int i = 1; i <= n; ++i)
      q += v(i) * v(i);
    const double vmax = v.cwiseAbs().maxCoeff();
    CausalType type = CausalType::Null;
    if (q < -tol * vmax * vmax)
      type = CausalType::Timelike;
    else if (q > tol * vmax * vmax)
      type = CausalType::Spacelike;
    out.basis.push_back(std::move(v));
    out.causal_types.push_back(type);
  }
  return out;
}

HolonomyReport classify(const MatrixSubspace& hol, double tol) {
  if (hol.rows() != hol.cols())
    throw InputError("classification needs square matrices");
  if (!hol.closed_under_bracket())
    throw ContractViolationError("holonomy candidate is not closed under the bracket");
  const int n = hol.rows() - 2;

  HolonomyReport report;
  report.algebra_dim = hol.dim();
  report.closed_under_bracket = true;

  const TractorSpace tractors = stabilized_tractors(hol, tol);
  report.stabilized_tractor_dim = static_cast<int>(tractors.basis.size());
  report.tractor_causal_types = tractors.causal_types;

  // signature of tr(XY) restricted to the subalgebra
  const auto mats = hol.basis();
  const int d = hol.dim();
  if (d > 0) {
    Eigen::MatrixXd gram(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        const double t = mats[static_cast<std::size_t>(a)]
                             .cwiseProduct(mats[static_cast<std::size_t>(b)].transpose())
                             .sum();
        gram(a, b) = t;
        gram(b, a) = t;
      }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(gram);
    const double eig_scale = eigen.eigenvalues().cwiseAbs().maxCoeff();
    for (int a = 0; a < d; ++a) {
      const double ev = eigen.eigenvalues()(a);
      if (ev > tol * eig_scale)
        ++report.killing_signature[0];
      else if (ev < -tol * eig_scale)
        ++report.killing_signature[1];
      else
        ++report.killing_signature[2];
    }
  }

  const bool negative_definite =
      report.killing_signature[0] == 0 && report.killing_signature[2] == 0;
  const bool one_timelike_line = report.stabilized_tractor_dim == 1 &&
                                 !tractors.causal_types.empty() &&
                                 tractors.causal_types.front() == CausalType::Timelike;
  if (report.algebra_dim == 0)
    report.candidate_name = "trivial";
  else if (report.algebra_dim == n * (n + 1) / 2 && one_timelike_line && negative_definite)
    report.candidate_name = "so(" + std::to_string(n + 1) + ")";
  else if (report.algebra_dim == (n + 1) * (n + 2) / 2)
    report.candidate_name = "so(1," + std::to_string(n + 1) + ")";
  return report;
}

} // namespace conformal
