#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

#include <span>
#include <string>
#include <vector>

namespace sigmagreen {

/// Writes sigma_0..sigma_{out.size()-1} of `x` into `out`, using the
/// coefficient recurrence of prod_i (t + x_i). O(n k).
template <class Real>
void elementary_symmetric(std::span<const Real> x, std::span<Real> out) {
  const std::size_t kmax = out.size() - 1;
  out[0] = Real(1);
  for (std::size_t j = 1; j <= kmax; ++j) out[j] = Real(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t top = std::min(kmax, i + 1);
    for (std::size_t j = top; j >= 1; --j) out[j] += x[i] * out[j - 1];
  }
}

/// sigma_k(x) for a single order k.
template <class Real>
Real sigma_of(int k, std::span<const Real> x) {
  std::vector<Real> e(static_cast<std::size_t>(k) + 1);
  elementary_symmetric<Real>(x, e);
  return e[static_cast<std::size_t>(k)];
}

/// d sigma_k / d x_i = sigma_{k-1}(x with entry i removed), for all i.
template <class Real>
void sigma_gradient(int k, std::span<const Real> x, std::span<Real> grad) {
  const std::size_t n = x.size();
  std::vector<Real> rest(n - 1);
  std::vector<Real> e(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (k == 0) {
      grad[i] = Real(0);
      continue;
    }
    std::size_t p = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest[p++] = x[j];
    elementary_symmetric<Real>(rest, e);
    grad[i] = e[static_cast<std::size_t>(k - 1)];
  }
}

double binomial(int n, int k);

// sigma_k(lambda); 0 <= k <= n, sigma_0 = 1.
double sigma(int k, const EigenvalueVector& lam);

// All sigma_0..sigma_n.
std::vector<double> sigma_all(const EigenvalueVector& lam);

// sigma_k of the eigenvalues of A.
double sigma_matrix(int k, const SymmetricMatrix& A);

// T_k(A) = sum_{l=0}^k (-1)^{k-l} sigma_l(A) A^{k-l}; 0 <= k <= n-1.
SymmetricMatrix newton_tensor(int k, const SymmetricMatrix& A);

}  // namespace sigmagreen
