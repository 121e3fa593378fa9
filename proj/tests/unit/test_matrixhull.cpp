#include "oracles.hpp"
#include "sigmagreen/matrixhull.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace sigmagreen;

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<int> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) return false;
  return true;
}

void check_decomposition(const Eigen::MatrixXd& S) {
  const int n = static_cast<int>(S.rows());
  const WeightedPermutationList items = bvn_decompose(DoublyStochasticMatrix(S));
  CHECK(static_cast<int>(items.size()) <= n * n - 2 * n + 2);
  double total = 0;
  for (const auto& it : items) {
    CHECK(it.weight > 0);
    CHECK(is_permutation(it.perm));
    total += it.weight;
  }
  CHECK(std::abs(total - 1) < 1e-12);
  CHECK((reconstruct(items, n) - S).cwiseAbs().maxCoeff() < 1e-10);
}

}  // namespace

TEST_SUITE("matrixhull") {
  TEST_CASE("doubly stochastic validation") {
    CHECK_THROWS_AS(DoublyStochasticMatrix(Eigen::MatrixXd::Ones(2, 3) / 3), ArgumentError);
    Eigen::MatrixXd m(2, 2);
    m << 0.6, 0.4, 0.5, 0.5;
    CHECK_THROWS_AS(DoublyStochasticMatrix{m}, ArgumentError);
    m << 1 + 1e-13, -1e-13, -1e-13, 1 + 1e-13;
    CHECK(DoublyStochasticMatrix(m).matrix().minCoeff() == 0.0);
  }

  TEST_CASE("identity and permutation matrices") {
    const auto items = bvn_decompose(DoublyStochasticMatrix(Eigen::MatrixXd::Identity(4, 4)));
    REQUIRE(items.size() == 1);
    CHECK(items[0].weight == doctest::Approx(1));
    CHECK(items[0].perm == std::vector<int>{0, 1, 2, 3});
    const std::vector<int> p{2, 0, 3, 1};
    const auto single = bvn_decompose(DoublyStochasticMatrix(permutation_matrix(p)));
    REQUIRE(single.size() == 1);
    CHECK(single[0].perm == p);
  }

  TEST_CASE("uniform and two-permutation mixtures") {
    check_decomposition(Eigen::MatrixXd::Constant(5, 5, 0.2));
    const Eigen::MatrixXd mix = 0.3 * permutation_matrix({1, 2, 0}) + 0.7 * permutation_matrix({0, 1, 2});
    const auto items = bvn_decompose(DoublyStochasticMatrix(mix));
    CHECK(items.size() == 2);
    check_decomposition(mix);
  }

  TEST_CASE("squared orthogonal matrices") {
    std::mt19937_64 rng(17);
    for (int n : {2, 3, 4, 6})
      for (int t = 0; t < 25; ++t) check_decomposition(squared_orthogonal(oracle::random_orthogonal(n, rng)).matrix());
    CHECK_THROWS_AS(squared_orthogonal(2 * Eigen::MatrixXd::Identity(3, 3)), ArgumentError);
  }

  TEST_CASE("midpoint hull check") {
    std::mt19937_64 rng(23);
    for (int n : {2, 3, 4})
      for (int t = 0; t < 40; ++t) {
        const SymmetricMatrix A(oracle::random_symmetric(n, rng, 3));
        const SymmetricMatrix B(oracle::random_symmetric(n, rng, 3));
        const HullCheckResult r = midpoint_hull_check(A, B);
        CHECK(r.feasible);
        CHECK(r.lp_residual < 1e-9);
        CHECK(r.constructive_residual < 1e-9);
        double wsum = 0;
        for (const auto& c : r.constructive) wsum += c.weight;
        CHECK(std::abs(wsum - 1) < 1e-10);
        CHECK(std::is_sorted(r.w.data(), r.w.data() + n));
      }
    CHECK_THROWS_AS(midpoint_hull_check(SymmetricMatrix::identity(7), SymmetricMatrix::identity(7)), ArgumentError);
    CHECK_THROWS_AS(midpoint_hull_check(SymmetricMatrix::identity(3), SymmetricMatrix::identity(2)), ArgumentError);
  }

  TEST_CASE("commuting pair") {
    const double a[] = {1, 2, 3}, b[] = {3, 2, 1};
    const HullCheckResult r = midpoint_hull_check(SymmetricMatrix::diagonal(a), SymmetricMatrix::diagonal(b));
    CHECK(r.feasible);
    CHECK((r.w - Eigen::Vector3d(2, 2, 2)).norm() < 1e-12);
  }
}
