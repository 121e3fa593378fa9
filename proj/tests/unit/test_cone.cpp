#include "oracles.hpp"
#include "sigmagreen/cone.hpp"
#include "sigmagreen/symfunc.hpp"

#include <doctest.h>

#include <cmath>

using namespace sigmagreen;

namespace {

EigenvalueVector tip(int n, double mu) {
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v[0] = -mu;
  return EigenvalueVector(v);
}

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("gamma_k membership examples") {
    const Cone g2 = Cone::gamma_k(3, 2);
    CHECK(g2.contains({1, 1, 1}, 1e-12).verdict == Verdict::Interior);
    CHECK(g2.contains({1, 0, 0}, 1e-12).verdict == Verdict::Boundary);
    CHECK(g2.contains({-1, -1, 1}, 1e-12).verdict == Verdict::Outside);
    // sigma_2(-1/2, 1, 1) = 0
    CHECK(g2.contains({-0.5, 1, 1}, 1e-12).verdict == Verdict::Boundary);
    CHECK(Cone::gamma_k(4, 4).contains({1, 1, 1, 1e-3}, 1e-12).verdict == Verdict::Interior);
    CHECK(Cone::gamma_k(4, 4).contains({1, 1, 1, -1e-3}, 1e-12).verdict == Verdict::Outside);
    CHECK_THROWS_AS(Cone::gamma_k(3, 4), ArgumentError);
    CHECK_THROWS_AS(g2.contains({1, 1}, 1e-12), ArgumentError);
  }

  TEST_CASE("membership is scale invariant") {
    const Cone c = Cone::gamma_k(5, 3);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> U(-1, 2);
    for (int t = 0; t < 200; ++t) {
      Eigen::VectorXd v(5);
      for (int i = 0; i < 5; ++i) v[i] = U(rng);
      const ConeMembership a = c.contains(EigenvalueVector(v), 1e-12);
      for (double s : {1e-6, 3.0, 1e5}) {
        const ConeMembership b = c.contains(EigenvalueVector(Eigen::VectorXd(s * v)), 1e-12);
        CHECK(a.verdict == b.verdict);
        CHECK(std::abs(a.signed_margin - b.signed_margin) < 1e-12);
      }
    }
  }

  TEST_CASE("mu_plus for gamma_k is (n-k)/k") {
    for (int n = 2; n <= 8; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(std::abs(mu_plus(Cone::gamma_k(n, k)) - double(n - k) / k) < 1e-10);
  }

  TEST_CASE("tip of the cone straddles mu_plus") {
    const Cone c = Cone::gamma_k(6, 2);
    const double mu = mu_plus(c);
    CHECK(c.contains(tip(6, mu - 1e-6), 1e-12).verdict == Verdict::Interior);
    CHECK(c.contains(tip(6, mu + 1e-6), 1e-12).verdict == Verdict::Outside);
  }

  TEST_CASE("ball slice reproduces gamma_2") {
    for (int n : {3, 4, 5}) {
      const Cone ball = Cone::custom(n, ball_slice(n, std::sqrt(1.0 - 1.0 / n)));
      const Cone g2 = Cone::gamma_k(n, 2);
      CHECK(std::abs(mu_plus(ball) - mu_plus(g2)) < 1e-10);
      std::mt19937_64 rng(n);
      std::uniform_real_distribution<double> U(-1, 2);
      int agree = 0, total = 0;
      for (int t = 0; t < 500; ++t) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = U(rng);
        const auto a = ball.contains(EigenvalueVector(v), 1e-12).verdict;
        const auto b = g2.contains(EigenvalueVector(v), 1e-12).verdict;
        ++total;
        agree += (a == b);
      }
      CHECK(agree == total);
    }
  }

  TEST_CASE("custom cone rejects bad slices") {
    SliceFunction convex{[](const Eigen::VectorXd& x) { return x.squaredNorm() - 0.01; },
                         [](const Eigen::VectorXd& x) { return Eigen::VectorXd(2 * x); }, "convex"};
    CHECK_THROWS_AS(Cone::custom(3, convex), ArgumentError);
    CHECK_THROWS_AS(Cone::custom(9, ball_slice(9, 0.5)), ArgumentError);
  }

  TEST_CASE("opening a cone") {
    const Cone g2 = Cone::gamma_k(5, 2);
    CHECK_THROWS_AS(g2.open_up(0.4), ArgumentError);
    // t = 1 is the identity map.
    CHECK(std::abs(mu_plus(g2.open_up(1.0)) - 1.5) < 1e-10);
    const double mu_open = mu_plus(g2.open_up(0.75));
    CHECK(mu_open > 1.5);
    CHECK(mu_open < 4.0);
    // Gamma_1 is fixed by the map.
    CHECK(std::abs(mu_plus(Cone::gamma_k(5, 1).open_up(0.6)) - 4.0) < 1e-9);
    // Monotone in t.
    CHECK(mu_plus(g2.open_up(0.6)) > mu_open);
    CHECK(!g2.open_up(0.75).k().has_value());
  }

  TEST_CASE("slice value for gamma_k at the center is 1/n") {
    const Cone c = Cone::gamma_k(5, 3);
    const std::vector<double> x(5, 0.2);
    std::vector<double> g(5);
    CHECK(c.slice_value<double>(x, g) == doctest::Approx(0.2));
  }
}

TEST_SUITE("cone") {
  TEST_CASE("defining function kinds") {
    const Cone g1 = Cone::gamma_k(4, 1);
    const Cone g2 = Cone::gamma_k(4, 2);
    CHECK(DefiningFunction::build(g1).kind() == DefiningFunction::Kind::SigmaOne);
    CHECK(DefiningFunction::build(g1).value({1, 2, 3, -1}) == doctest::Approx(5));
    // (1,0,...,0) lies on the boundary of Gamma_2, so alpha drops to 1/2.
    CHECK(DefiningFunction::build(g2).alpha() == 0.5);
    CHECK(DefiningFunction::build(g2, 0.3).alpha() == 0.3);
    CHECK_THROWS_AS(DefiningFunction::build(g2, 1.0), ArgumentError);
    CHECK_THROWS_AS(DefiningFunction::build(g2, 0.0), ArgumentError);
    const DefiningFunction root = DefiningFunction::sigma_root(g2);
    CHECK(root.value(EigenvalueVector::constant(4, 1.0)) == doctest::Approx(1.0));
    CHECK(DefiningFunction::sigma_root(g2, false).value(EigenvalueVector::constant(4, 1.0)) ==
          doctest::Approx(std::sqrt(6.0)));
    CHECK_THROWS_AS(root.value({-1, -1, 1, 0}), DomainError);
    CHECK(root.value({1, 0, 0, 0}) == 0.0);
  }

  TEST_CASE("defining function structure") {
    for (int n : {4, 5, 6})
      for (int k : {2, 3}) {
        const Cone c = Cone::gamma_k(n, k);
        for (const DefiningFunction& f : {DefiningFunction::build(c), DefiningFunction::sigma_root(c)}) {
          std::mt19937_64 rng(100 * n + k);
          for (int t = 0; t < 100; ++t) {
            const EigenvalueVector a = sample_interior(c, rng);
            const EigenvalueVector b = sample_interior(c, rng);
            const double fa = f.value(a);
            // Homogeneity.
            CHECK(std::abs(f.value(EigenvalueVector(Eigen::VectorXd(2.5 * a.values()))) - 2.5 * fa) < 1e-10 * (1 + fa));
            // Midpoint concavity.
            const double mid = f.value(EigenvalueVector(Eigen::VectorXd(0.5 * (a.values() + b.values()))));
            CHECK(mid >= 0.5 * (fa + f.value(b)) - 1e-12);
            // Positive partials and Euler's identity.
            const Eigen::VectorXd g = f.gradient(a);
            CHECK(g.minCoeff() > 0);
            CHECK(std::abs(g.dot(a.values()) - fa) < 1e-10);
          }
          CHECK(ellipticity_ratio(f, 200, 9) > 0);
        }
      }
  }

  TEST_CASE("defining function gradient matches finite differences") {
    const Cone c = Cone::gamma_k(5, 2);
    const DefiningFunction f = DefiningFunction::build(c);
    std::mt19937_64 rng(2);
    const EigenvalueVector a = sample_interior(c, rng);
    const Eigen::VectorXd g = f.gradient(a);
    const double h = 1e-6;
    for (int i = 0; i < 5; ++i) {
      Eigen::VectorXd p = a.values(), m = a.values();
      p[i] += h;
      m[i] -= h;
      CHECK(std::abs((f.value(EigenvalueVector(p)) - f.value(EigenvalueVector(m))) / (2 * h) - g[i]) < 1e-7);
    }
  }

  TEST_CASE("defining function is symmetric") {
    const DefiningFunction f = DefiningFunction::build(Cone::gamma_k(4, 3));
    std::vector<double> x{0.9, 1.3, 0.7, 1.1};
    const double ref = f.value(EigenvalueVector(x));
    std::sort(x.begin(), x.end());
    do {
      CHECK(std::abs(f.value(EigenvalueVector(x)) - ref) < 1e-13);
    } while (std::next_permutation(x.begin(), x.end()));
  }
}
