#include "oracles.hpp"
#include "sigmagreen/conformal.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace sigmagreen;

namespace {

Eigen::VectorXd sorted(Eigen::VectorXd v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

// Jet of w = u^{-2/(n-2)} from the jet of u.
PointJet w_jet(const PointJet& j) {
  const double p = -2.0 / (j.n - 2);
  const double w = std::pow(j.u, p);
  const Eigen::VectorXd gw = p * std::pow(j.u, p - 1) * j.grad;
  const Eigen::MatrixXd hw =
      p * std::pow(j.u, p - 1) * j.hess.matrix() + p * (p - 1) * std::pow(j.u, p - 2) * j.grad * j.grad.transpose();
  PointJet out = PointJet::flat(w, gw, SymmetricMatrix(hw));
  return out;
}

}  // namespace

TEST_SUITE("conformal") {
  TEST_CASE("generalized eigenvalues") {
    const double a[] = {1, 2}, g[] = {1, 4};
    const Eigen::VectorXd e = eigen_wrt(SymmetricMatrix::diagonal(a), SymmetricMatrix::diagonal(g)).values();
    CHECK(e[0] == doctest::Approx(0.5));
    CHECK(e[1] == doctest::Approx(1.0));
    Eigen::MatrixXd bad(2, 2);
    bad << 1, 0, 0, -1;
    CHECK_THROWS(eigen_wrt(SymmetricMatrix::identity(2), SymmetricMatrix(bad)));
  }

  TEST_CASE("schouten of an exponential factor") {
    // u = exp(x_1) at the origin, n = 4; reference from Christoffel symbols of u^2 dx^2.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(4);
    grad[0] = 1;
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(4, 4);
    hess(0, 0) = 1;
    const Eigen::MatrixXd A = schouten_conformal(PointJet::flat(1.0, grad, SymmetricMatrix(hess))).matrix();
    Eigen::MatrixXd expect = -0.5 * Eigen::MatrixXd::Identity(4, 4);
    expect(0, 0) = 0.5;
    CHECK((A - expect).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("flat jet has zero schouten") {
    const Eigen::MatrixXd A = schouten_conformal(PointJet::flat(3.0, Eigen::VectorXd::Zero(5), SymmetricMatrix::zero(5))).matrix();
    CHECK(A.cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("jet validation") {
    CHECK_THROWS_AS(PointJet::flat(-1.0, Eigen::VectorXd::Zero(3), SymmetricMatrix::zero(3)).validate(), DomainError);
    CHECK_THROWS(PointJet::flat(1.0, Eigen::VectorXd::Zero(2), SymmetricMatrix::zero(3)).validate());
    CHECK_THROWS(PointJet::flat(1.0, Eigen::VectorXd::Zero(2), SymmetricMatrix::zero(2)).validate());
  }

  TEST_CASE("w-form agrees with the u-form") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int n : {3, 4, 6})
      for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd grad(n);
        for (int i = 0; i < n; ++i) grad[i] = U(rng);
        const PointJet j = PointJet::flat(0.5 + std::abs(U(rng)), grad, SymmetricMatrix(oracle::random_symmetric(n, rng)));
        const PointJet w = w_jet(j);
        const Eigen::MatrixXd lhs = schouten_conformal(j).matrix();
        const Eigen::MatrixXd rhs = schouten_w(w).matrix() / w.u;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10 * (1 + lhs.cwiseAbs().maxCoeff()));
      }
  }

  TEST_CASE("schouten_w of the round factor") {
    // w = 1 + |x|^2 / 4 at e_1 in R^4.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(4);
    grad[0] = 0.5;
    const PointJet j = PointJet::flat(1.25, grad, SymmetricMatrix(0.5 * Eigen::MatrixXd::Identity(4, 4)));
    CHECK((schouten_w(j).matrix() - 0.4 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("radial formulas agree with the full jet") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.1, 2);
    for (int n : {3, 5, 7})
      for (int t = 0; t < 30; ++t) {
        const RadialJet rj{U(rng), U(rng), U(rng) - 1, 3 * (U(rng) - 1)};
        const PointJet pj = embed_radial(n, rj);
        const SymmetricMatrix metric(std::pow(rj.u, 4.0 / (n - 2)) * Eigen::MatrixXd::Identity(n, n));
        const Eigen::VectorXd full = eigen_wrt(schouten_conformal(pj), metric).values();
        const Eigen::VectorXd radial = sorted(radial_eigenvalues(n, rj).values());
        CHECK((full - radial).cwiseAbs().maxCoeff() < 1e-10 * (1 + full.cwiseAbs().maxCoeff()));
      }
  }

  TEST_CASE("chi for power laws") {
    // u = r^{2-n}: the Kelvin transform of a constant, conformally flat with zero Schouten.
    for (int n : {3, 4, 5}) {
      const double r = 0.7, p = 2 - n;
      const RadialJet j{r, std::pow(r, p), p * std::pow(r, p - 1), p * (p - 1) * std::pow(r, p - 2)};
      const ChiPair c = radial_chi(n, j);
      CHECK(std::abs(c.chi1) < 1e-12);
      CHECK(std::abs(c.chi2) < 1e-12);
    }
  }

  TEST_CASE("bubble eigenvalues") {
    // u = (1 / (1 + r^2))^{(n-2)/2}: every eigenvalue equals 2 for every n.
    for (int n : {3, 4, 5, 8})
      for (double r : {0.1, 0.5, 2.0, 10.0}) {
        const double q = (n - 2) / 2.0, s = 1 + r * r;
        const double u = std::pow(s, -q);
        const double du = -2 * q * r * std::pow(s, -q - 1);
        const double d2u = -2 * q * std::pow(s, -q - 1) + 4 * q * (q + 1) * r * r * std::pow(s, -q - 2);
        const Eigen::VectorXd e = radial_eigenvalues(n, {r, u, du, d2u}).values();
        CHECK((e.array() - 2.0).abs().maxCoeff() < 1e-10);
        if (n == 4) {
          const ChiPair c = radial_chi(n, {r, u, du, d2u});
          CHECK(std::abs(c.chi1 / (u * u) - 2) < 1e-10);
          CHECK(std::abs(c.chi2) < 1e-10);
        }
      }
  }

  TEST_CASE("log-jet eigenvalues match the jet path") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int n : {3, 5, 6})
      for (int t = 0; t < 30; ++t) {
        const double r = std::exp(U(rng)), y = U(rng), ys = 2 * U(rng), yss = 2 * U(rng);
        const double u = std::exp(y);
        const RadialJet j{r, u, u * ys / r, u * (yss - ys + ys * ys) / (r * r)};
        const Eigen::VectorXd a = radial_eigenvalues(n, j).values();
        const Eigen::VectorXd b = radial_eigenvalues_log(n, r, y, ys, yss).values();
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12 * (1 + a.cwiseAbs().maxCoeff()));
      }
  }

  TEST_CASE("radial jet validation") {
    CHECK_THROWS_AS(radial_chi(4, {0.0, 1, 0, 0}), DomainError);
    CHECK_THROWS_AS(radial_chi(4, {1.0, -1, 0, 0}), DomainError);
  }
}
