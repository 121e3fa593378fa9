#include "oracles.hpp"
#include "sigmagreen/symfunc.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sigmagreen;

TEST_SUITE("symfunc") {
  TEST_CASE("sigma basic values") {
    CHECK(sigma(2, EigenvalueVector{1, 1, 1}) == doctest::Approx(3));
    CHECK(sigma(4, EigenvalueVector::constant(4, 1.0)) == doctest::Approx(1));
    CHECK(sigma(0, EigenvalueVector{2, 3}) == 1.0);
    CHECK_THROWS_AS(sigma(4, EigenvalueVector{1, 2, 3}), ArgumentError);
    CHECK_THROWS_AS(sigma(-1, EigenvalueVector{1, 2, 3}), ArgumentError);
  }

  TEST_CASE("sigma matches subset enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(6);
      for (auto& v : x) v = U(rng);
      const EigenvalueVector lam(x);
      for (int k = 0; k <= 6; ++k) {
        const double expect = oracle::sigma_brute(k, x);
        CHECK(std::abs(sigma(k, lam) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
      }
    }
  }

  TEST_CASE("sigma is permutation invariant") {
    std::vector<double> x{0.3, -1.2, 2.5, 0.7, -0.4};
    const double ref = sigma(3, EigenvalueVector(x));
    std::sort(x.begin(), x.end());
    do {
      CHECK(std::abs(sigma(3, EigenvalueVector(x)) - ref) <= 1e-14);
    } while (std::next_permutation(x.begin(), x.end()));
  }

  TEST_CASE("sigma_matrix") {
    CHECK(sigma_matrix(1, SymmetricMatrix::identity(4)) == doctest::Approx(4));
    const double d[] = {2, 3, 5};
    CHECK(sigma_matrix(2, SymmetricMatrix::diagonal(d)) == doctest::Approx(2 * 3 + 2 * 5 + 3 * 5));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      const Eigen::MatrixXd A = oracle::random_symmetric(5, rng);
      const double expect = 0.5 * (A.trace() * A.trace() - (A * A).trace());
      CHECK(std::abs(sigma_matrix(2, SymmetricMatrix(A)) - expect) < 1e-12);
    }
  }

  TEST_CASE("newton tensor examples") {
    std::mt19937_64 rng(1);
    const SymmetricMatrix A(oracle::random_symmetric(4, rng));
    CHECK((newton_tensor(0, A).matrix() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-15);
    CHECK((newton_tensor(2, SymmetricMatrix::identity(5)).matrix() - 6 * Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-12);
    const double d[] = {1, 2, 3};
    const Eigen::MatrixXd T1 = newton_tensor(1, SymmetricMatrix::diagonal(d)).matrix();
    CHECK((T1 - Eigen::Vector3d(5, 4, 3).asDiagonal().toDenseMatrix()).norm() < 1e-12);
    CHECK_THROWS_AS(newton_tensor(3, SymmetricMatrix::identity(3)), ArgumentError);
  }

  TEST_CASE("newton tensor identities") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const int n = 5;
      const SymmetricMatrix A(oracle::random_symmetric(n, rng));
      for (int k = 0; k <= n - 1; ++k) {
        const Eigen::MatrixXd T = newton_tensor(k, A).matrix();
        CHECK(std::abs(T.trace() - (n - k) * sigma_matrix(k, A)) < 1e-10);
        CHECK(std::abs((A.matrix() * T).trace() - (k + 1) * sigma_matrix(k + 1, A)) < 1e-10);
        CHECK((T - T.transpose()).norm() == 0.0);
        if (k + 1 <= n - 1) {
          const Eigen::MatrixXd next = -A.matrix() * T + sigma_matrix(k + 1, A) * Eigen::MatrixXd::Identity(n, n);
          CHECK((newton_tensor(k + 1, A).matrix() - next).cwiseAbs().maxCoeff() < 1e-10);
        }
      }
    }
  }

  TEST_CASE("newton tensor is the gradient of sigma_{k+1}") {
    std::mt19937_64 rng(8);
    const int n = 4;
    const Eigen::MatrixXd A = oracle::random_symmetric(n, rng);
    const double h = 1e-4;
    for (int k = 0; k <= n - 1; ++k) {
      const Eigen::MatrixXd T = newton_tensor(k, SymmetricMatrix(A)).matrix();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          // Perturb the symmetric pair so the matrix stays symmetric; the derivative is then T_ij + T_ji off-diagonal.
          Eigen::MatrixXd E = Eigen::MatrixXd::Zero(n, n);
          E(i, j) += h;
          if (i != j) E(j, i) += h;
          const double fd = (sigma_matrix(k + 1, SymmetricMatrix(A + E)) - sigma_matrix(k + 1, SymmetricMatrix(A - E))) / (2 * h);
          const double expect = i == j ? T(i, i) : 2 * T(i, j);
          CHECK(std::abs(fd - expect) < 1e-6);
        }
    }
  }
}
