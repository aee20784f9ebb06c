#pragma once

#include <random>

#include <Eigen/Dense>

namespace test_util {

// every test seeds its own engine so cases stay order-independent
inline std::mt19937 engine(unsigned seed) { return std::mt19937(seed); }

inline Eigen::VectorXd random_vector(int n, std::mt19937& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i)
    v(i) = dist(gen);
  return v;
}

inline Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = dist(gen);
  return m;
}

inline Eigen::MatrixXd random_antisymmetric(int n, std::mt19937& gen) {
  const Eigen::MatrixXd m = random_matrix(n, n, gen);
  return 0.5 * (m - m.transpose());
}

inline Eigen::MatrixXd random_orthogonal(int n, std::mt19937& gen) {
  const Eigen::MatrixXd m = random_matrix(n, n, gen);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ();
}

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
}

} // namespace test_util
