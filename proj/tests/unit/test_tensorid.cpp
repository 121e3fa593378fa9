#include "sigmagreen/conformal.hpp"
#include "sigmagreen/symfunc.hpp"
#include "sigmagreen/tensorid.hpp"

#include <doctest.h>

#include <cmath>

using namespace sigmagreen;

TEST_SUITE("tensorid") {
  TEST_CASE("catalog fields have consistent derivatives") {
    Eigen::VectorXd a(3);
    a << 0.2, -0.1, 0.3;
    for (const ScalarField& f :
         {gaussian_field(3), power_offset_field(3), exp_linear_field(a), quadratic_field(3, 1, 0.25), affine_field(a, 2)}) {
      Eigen::VectorXd x(3);
      x << 0.3, -0.2, 0.5;
      const double h = 1e-5;
      for (int i = 0; i < 3; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(3);
        e[i] = h;
        CHECK(std::abs((f.value(x + e) - f.value(x - e)) / (2 * h) - f.grad(x)[i]) < 1e-8);
        const Eigen::VectorXd dg = (f.grad(x + e) - f.grad(x - e)) / (2 * h);
        CHECK((dg - f.hess(x).col(i)).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
    CHECK_THROWS_AS(field_by_name("nope", 3), ArgumentError);
    CHECK_THROWS_AS(constant_field(3, -1), ArgumentError);
  }

  TEST_CASE("newton field trace") {
    const ScalarField u = gaussian_field(4);
    Eigen::VectorXd x(4);
    x << 0.3, 0.1, -0.4, 0.2;
    const PointJet jet = PointJet::flat(u.value(x), u.grad(x), SymmetricMatrix(u.hess(x)));
    const SymmetricMatrix metric(std::pow(jet.u, 2.0) * Eigen::MatrixXd::Identity(4, 4));
    const EigenvalueVector lam = eigen_wrt(schouten_conformal(jet), metric);
    for (int k = 0; k <= 3; ++k) {
      const Eigen::MatrixXd T = newton_field(u, k, x);
      CHECK(std::abs(T.trace() - (4 - k) * sigma(k, lam)) < 1e-10);
    }
  }

  TEST_CASE("divergence identity") {
    Eigen::VectorXd x(3);
    x << 0.2, -0.3, 0.1;
    CHECK(divergence_residual(constant_field(3, 2), 1, x, 1e-2).cwiseAbs().maxCoeff() == 0.0);
    const double coarse = divergence_residual(gaussian_field(3), 2, x, 1e-2).cwiseAbs().maxCoeff();
    const double fine = divergence_residual(gaussian_field(3), 2, x, 5e-3).cwiseAbs().maxCoeff();
    CHECK(fine < coarse);
    CHECK(fine < 1e-3);
    CHECK_THROWS_AS(divergence_residual(gaussian_field(3), 3, x, 1e-2), ArgumentError);
    CHECK_THROWS_AS(divergence_residual(gaussian_field(3), 1, x, 0.5), ArgumentError);
  }

  TEST_CASE("richardson ratio for the gaussian field") {
    Eigen::VectorXd x(4);
    x << 0.3, 0.1, -0.2, 0.4;
    const double a = divergence_residual(gaussian_field(4), 2, x, 1e-2).cwiseAbs().maxCoeff();
    const double b = divergence_residual(gaussian_field(4), 2, x, 5e-3).cwiseAbs().maxCoeff();
    CHECK(a / b == doctest::Approx(4).epsilon(0.05));
  }

  TEST_CASE("k = 0 is exact") {
    Eigen::VectorXd x(4);
    x << 0.3, 0.1, -0.2, 0.4;
    CHECK(divergence_residual(gaussian_field(4), 0, x, 1e-2).cwiseAbs().maxCoeff() < 1e-13);
  }

  TEST_CASE("second-order convergence") {
    for (int n : {3, 4}) {
      Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 0.15);
      for (int k : {1, 2}) {
        const ResidualReport r =
            convergence_study(Identity::Divergence, power_offset_field(n), k, x, {4e-2, 2e-2, 1e-2, 5e-3});
        CHECK(!r.exact);
        CHECK(r.order > 1.7);
        CHECK(r.order < 2.3);
      }
    }
    CHECK_THROWS_AS(convergence_study(Identity::Divergence, gaussian_field(3), 1, Eigen::VectorXd::Zero(3), {1e-2, 2e-2}),
                    ArgumentError);
  }

  TEST_CASE("curl identity") {
    Eigen::VectorXd a(4);
    a << 0.3, -0.2, 0.1, 0.4;
    const Eigen::VectorXd x = Eigen::VectorXd::Constant(4, 0.1);
    // Hessians of affine and quadratic w are constant, so central differences are exact.
    for (const ScalarField& w : {affine_field(a, 2), quadratic_field(4, 1, 0.25)}) {
      const ResidualReport r = convergence_study(Identity::Curl, w, 0, x, {1e-1, 5e-2, 2.5e-2});
      CHECK(r.exact);
      CHECK(std::isinf(r.order));
    }
    const ResidualReport g = convergence_study(Identity::Curl, gaussian_field(4), 0, x, {4e-2, 2e-2, 1e-2});
    CHECK(g.order > 1.7);
    CHECK(g.order < 2.3);
  }

  TEST_CASE("w tensor of the round factor") {
    // w = 1 + |x|^2 / 4: A = w/2 I - |x|^2/8 I = 1/2 I.
    const ScalarField w = quadratic_field(3, 1, 0.25);
    Eigen::VectorXd x(3);
    x << 0.4, -0.7, 1.1;
    CHECK((w_tensor(w, x) - 0.5 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  }
}
