#include "sigmagreen/symfunc.hpp"

#include <cmath>
#include <string>

namespace sigmagreen {

namespace {

void check_order(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw ArgumentError(std::string(what) + ": order " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

double sigma(int k, const EigenvalueVector& lam) {
  check_order(k, 0, lam.size(), "sigma");
  return sigma_of<double>(k, lam.span());
}

std::vector<double> sigma_all(const EigenvalueVector& lam) {
  std::vector<double> e(static_cast<std::size_t>(lam.size()) + 1);
  elementary_symmetric<double>(lam.span(), e);
  return e;
}

double sigma_matrix(int k, const SymmetricMatrix& A) {
  check_order(k, 0, A.dim(), "sigma_matrix");
  if (A.dim() < 2) {
    return k == 0 ? 1.0 : A(0, 0);
  }
  return sigma(k, EigenvalueVector(A.eigenvalues()));
}

SymmetricMatrix newton_tensor(int k, const SymmetricMatrix& A) {
  const int n = A.dim();
  check_order(k, 0, n - 1, "newton_tensor");
  const Eigen::VectorXd ev = A.eigenvalues();
  std::vector<double> s(static_cast<std::size_t>(k) + 1);
  elementary_symmetric<double>(std::span<const double>(ev.data(), static_cast<std::size_t>(n)), s);

  std::vector<Eigen::MatrixXd> powers{Eigen::MatrixXd::Identity(n, n)};
  for (int p = 1; p <= k; ++p) powers.push_back(symmetrized(A.matrix() * powers.back()));

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l <= k; ++l) {
    const double sign = ((k - l) % 2 == 0) ? 1.0 : -1.0;
    T += sign * s[static_cast<std::size_t>(l)] * powers[static_cast<std::size_t>(k - l)];
  }
  return SymmetricMatrix(T);
}

}  // namespace sigmagreen
