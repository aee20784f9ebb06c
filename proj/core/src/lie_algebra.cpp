#include "conformal/lie_algebra.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>
#include <utility>

namespace conformal {

namespace {

std::string format_triple(const std::array<int, 3>& t) {
  std::ostringstream os;
  os << "(" << t[0] << ", " << t[1] << ", " << t[2] << ")";
  return os.str();
}

} // namespace

LieAlgebraSpec::LieAlgebraSpec(std::string name, int dim,
                               std::vector<Eigen::VectorXd> pair_table)
    : name_(std::move(name)), dim_(dim), table_(std::move(pair_table)) {
  if (dim_ <= 0)
    throw InputError("algebra dimension must be positive");
  if (static_cast<int>(table_.size()) != pair_count(dim_))
    throw InputError("pair table size does not match the dimension");
  for (const auto& entry : table_)
    if (entry.size() != dim_)
      throw InputError("bracket coordinate vector has wrong length");

  ad_.reserve(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      if (j != i)
        m.col(j) = basis_bracket(i, j);
    ad_.push_back(std::move(m));
  }
}

Eigen::VectorXd LieAlgebraSpec::basis_bracket(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw InputError("basis index out of range");
  if (i == j)
    return Eigen::VectorXd::Zero(dim_);
  if (i < j)
    return table_[static_cast<std::size_t>(pair_index(i, j, dim_))];
  return -table_[static_cast<std::size_t>(pair_index(j, i, dim_))];
}

Eigen::VectorXd bracket(const LieAlgebraSpec& alg, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y) {
  const int n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw InputError("bracket operands must have length equal to the algebra dimension");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    if (x(i) != 0.0)
      out += x(i) * (alg.ad(i) * y);
  return out;
}

KillingForm killing_form(const LieAlgebraSpec& alg) {
  const int n = alg.dim();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // tr(ad_i ad_j)
      const double t = alg.ad(i).cwiseProduct(alg.ad(j).transpose()).sum();
      b(i, j) = t;
      b(j, i) = t;
    }
  return KillingForm{std::move(b)};
}

JacobiCheck jacobi_check(const LieAlgebraSpec& alg) {
  const int n = alg.dim();
  JacobiCheck out;
  out.worst_triple = {0, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd bij = alg.basis_bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd sum = bracket(alg, bij, Eigen::VectorXd::Unit(n, k));
        sum += bracket(alg, alg.basis_bracket(j, k), Eigen::VectorXd::Unit(n, i));
        sum += bracket(alg, alg.basis_bracket(k, i), Eigen::VectorXd::Unit(n, j));
        const double r = sum.cwiseAbs().maxCoeff();
        if (r > out.residual) {
          out.residual = r;
          out.worst_triple = {i, j, k};
        }
      }
    }
  return out;
}

double jacobi_residual(const LieAlgebraSpec& alg) { return jacobi_check(alg).residual; }

namespace {

// Plain Cholesky of -B in the given basis order; every pivot must exceed
// tol * max|B|.
Eigen::MatrixXd neg_killing_cholesky(const Eigen::MatrixXd& killing, double tol,
                                     const std::string& what) {
  const int n = static_cast<int>(killing.rows());
  const Eigen::MatrixXd a = -killing;
  const double scale = killing.cwiseAbs().maxCoeff();
  const double threshold = tol * scale;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double d = a(k, k);
    for (int t = 0; t < k; ++t)
      d -= l(k, t) * l(k, t);
    if (!(d > threshold))
      throw NotSemisimpleError(what + ": negative Killing form is not positive definite (pivot " +
                               std::to_string(d) + " at index " + std::to_string(k) + ")");
    l(k, k) = std::sqrt(d);
    for (int r = k + 1; r < n; ++r) {
      double v = a(r, k);
      for (int t = 0; t < k; ++t)
        v -= l(r, t) * l(k, t);
      l(r, k) = v / l(k, k);
    }
  }
  return l;
}

} // namespace

KillingForm assert_compact_semisimple(const LieAlgebraSpec& alg, double tol) {
  const JacobiCheck jc = jacobi_check(alg);
  if (jc.residual > tol)
    throw InvalidAlgebraError("Jacobi identity violated: residual " +
                              std::to_string(jc.residual) + " at basis triple " +
                              format_triple(jc.worst_triple));
  KillingForm killing = killing_form(alg);
  neg_killing_cholesky(killing.matrix, tol, alg.name());
  return killing;
}

LieAlgebraSpec direct_sum(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
  const int na = a.dim();
  const int nb = b.dim();
  const int n = na + nb;
  std::vector<Eigen::VectorXd> table(static_cast<std::size_t>(pair_count(n)),
                                     Eigen::VectorXd::Zero(n));
  for (int i = 0; i < na; ++i)
    for (int j = i + 1; j < na; ++j)
      table[static_cast<std::size_t>(pair_index(i, j, n))].head(na) = a.basis_bracket(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      table[static_cast<std::size_t>(pair_index(na + i, na + j, n))].tail(nb) =
          b.basis_bracket(i, j);
  return LieAlgebraSpec(a.name() + "+" + b.name(), n, std::move(table));
}

namespace {

constexpr int kMaxDim = 64; // dense structure-tensor storage limit

// Expands the commutators of a pairwise trace-orthogonal real matrix basis
// into structure constants.
template <typename Matrix>
std::vector<Eigen::VectorXd> structure_from_basis(const std::vector<Matrix>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<double> norm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    norm[static_cast<std::size_t>(k)] =
        (basis[static_cast<std::size_t>(k)].adjoint() * basis[static_cast<std::size_t>(k)])
            .trace()
            .real();
  std::vector<Eigen::VectorXd> table;
  table.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix comm = basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)] -
                          basis[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(i)];
      Eigen::VectorXd c(n);
      for (int k = 0; k < n; ++k)
        c(k) = (basis[static_cast<std::size_t>(k)].adjoint() * comm).trace().real() /
               norm[static_cast<std::size_t>(k)];
      table.push_back(std::move(c));
    }
  return table;
}

LieAlgebraSpec catalog_so(int m) {
  const int n = m * (m - 1) / 2;
  std::vector<Eigen::MatrixXcd> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(m, m);
      e(i, j) = 1.0;
      e(j, i) = -1.0;
      basis.push_back(std::move(e));
    }
  return LieAlgebraSpec("so(" + std::to_string(m) + ")", n, structure_from_basis(basis));
}

LieAlgebraSpec catalog_su(int m) {
  const std::complex<double> imag(0.0, 1.0);
  std::vector<Eigen::MatrixXcd> basis;
  // off-diagonal pairs: antisymmetric, then i * symmetric
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
      a(i, j) = 1.0;
      a(j, i) = -1.0;
      basis.push_back(a);
      Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(m, m);
      s(i, j) = imag;
      s(j, i) = imag;
      basis.push_back(s);
    }
  // diagonal traceless: i * diag(1, ..., 1, -k, 0, ..., 0)
  for (int k = 1; k < m; ++k) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(m, m);
    for (int t = 0; t < k; ++t)
      d(t, t) = imag;
    d(k, k) = -static_cast<double>(k) * imag;
    basis.push_back(d);
  }
  const int n = m * m - 1;
  return LieAlgebraSpec("su(" + std::to_string(m) + ")", n, structure_from_basis(basis));
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

LieAlgebraSpec catalog_term(const std::string& term) {
  const auto open = term.find('(');
  if (open == std::string::npos || term.back() != ')')
    throw UnknownAlgebraError("unknown algebra \"" + term + "\"");
  const std::string family = term.substr(0, open);
  const std::string arg = term.substr(open + 1, term.size() - open - 2);
  if (arg.empty() || arg.size() > 3 ||
      arg.find_first_not_of("0123456789") != std::string::npos)
    throw UnknownAlgebraError("unknown algebra \"" + term + "\"");
  const int m = std::stoi(arg);
  if (family == "so") {
    if (m < 3)
      throw UnknownAlgebraError("so(m) requires m >= 3, got \"" + term + "\"");
    return catalog_so(m);
  }
  if (family == "su") {
    if (m < 2)
      throw UnknownAlgebraError("su(m) requires m >= 2, got \"" + term + "\"");
    return catalog_su(m);
  }
  throw UnknownAlgebraError("unknown algebra \"" + term + "\"");
}

} // namespace

LieAlgebraSpec catalog(const std::string& name) {
  const std::string cleaned = strip_spaces(name);
  if (cleaned.empty())
    throw UnknownAlgebraError("empty algebra name");
  std::vector<std::string> terms;
  std::size_t start = 0;
  while (true) {
    const auto plus = cleaned.find('+', start);
    terms.push_back(cleaned.substr(start, plus == std::string::npos ? plus : plus - start));
    if (plus == std::string::npos)
      break;
    start = plus + 1;
  }
  LieAlgebraSpec result = catalog_term(terms.front());
  for (std::size_t t = 1; t < terms.size(); ++t)
    result = direct_sum(result, catalog_term(terms[t]));
  if (result.dim() > kMaxDim)
    throw InputError("algebra dimension " + std::to_string(result.dim()) +
                     " exceeds the supported limit " + std::to_string(kMaxDim));
  return result;
}

std::vector<std::string> catalog_names() {
  return {"so(3)", "so(4)", "so(5)", "so(6)", "su(2)", "su(3)", "su(4)"};
}

OrthonormalFrame orthonormal_frame(const KillingForm& killing, double tol) {
  const Eigen::MatrixXd l = neg_killing_cholesky(killing.matrix, tol, "orthonormal_frame");
  const int n = static_cast<int>(l.rows());
  OrthonormalFrame frame;
  frame.theta = l.transpose();
  frame.theta_inv = frame.theta.triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(n, n));
  return frame;
}

TransferredBracket::TransferredBracket(int n, std::vector<Eigen::VectorXd> pair_table)
    : n_(n), table_(std::move(pair_table)) {
  if (n_ <= 0)
    throw InputError("bracket dimension must be positive");
  if (static_cast<int>(table_.size()) != pair_count(n_))
    throw InputError("pair table size does not match the dimension");
}

Eigen::VectorXd TransferredBracket::rho(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InputError("basis index out of range");
  if (i == j)
    return Eigen::VectorXd::Zero(n_);
  if (i < j)
    return table_[static_cast<std::size_t>(pair_index(i, j, n_))];
  return -table_[static_cast<std::size_t>(pair_index(j, i, n_))];
}

Eigen::VectorXd TransferredBracket::apply(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw InputError("bracket operands must have length equal to the dimension");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double c = x(i) * y(j) - x(j) * y(i);
      if (c != 0.0)
        out += c * table_[static_cast<std::size_t>(pair_index(i, j, n_))];
    }
  return out;
}

Eigen::MatrixXd TransferredBracket::ad_matrix(int i) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j)
    if (j != i)
      m.col(j) = rho(i, j);
  return m;
}

double TransferredBracket::max_abs() const {
  double m = 0.0;
  for (const auto& v : table_)
    m = std::max(m, v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0);
  return m;
}

TransferredBracket transferred_bracket(const LieAlgebraSpec& alg,
                                       const OrthonormalFrame& frame) {
  const int n = alg.dim();
  if (frame.theta.rows() != n || frame.theta.cols() != n)
    throw InputError("frame dimension does not match the algebra");
  // the frame must be an isometry for -B
  const Eigen::MatrixXd gram =
      frame.theta_inv.transpose() * (-killing_form(alg).matrix) * frame.theta_inv;
  if ((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-6)
    throw InputError("frame is not an isometry for the negative Killing form");

  std::vector<Eigen::VectorXd> table;
  table.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      table.push_back(frame.theta *
                      bracket(alg, frame.theta_inv.col(i), frame.theta_inv.col(j)));
  return TransferredBracket(n, std::move(table));
}

} // namespace conformal
