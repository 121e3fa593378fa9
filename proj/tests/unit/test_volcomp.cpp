#include "sigmagreen/volcomp.hpp"

#include <boost/math/constants/constants.hpp>
#include <doctest.h>

#include <cmath>

using namespace sigmagreen;

namespace {

const double pi = boost::math::constants::pi<double>();

SampledFunction abs_samples(double h, int half) {
  SampledFunction f;
  for (int i = -half; i <= half; ++i) {
    f.grid.push_back(i * h);
    f.values.push_back(std::abs(i * h));
  }
  return f;
}

}  // namespace

TEST_SUITE("volcomp") {
  TEST_CASE("inf-convolution of |x| is the Huber function") {
    const double h = 1e-3, eps = 0.2;
    const SampledFunction f = abs_samples(h, 1000);
    const InfConvolution r = inf_convolution(f, eps);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = f.grid[i];
      const double huber = std::abs(x) <= eps / 2 ? x * x / eps : std::abs(x) - eps / 4;
      CHECK(std::abs(r.result.values[i] - huber) < 1e-12);
      CHECK(r.result.values[i] <= f.values[i] + 1e-15);
    }
  }

  TEST_CASE("inf-convolution is monotone in eps and matches brute force") {
    SampledFunction f;
    for (int i = 0; i <= 200; ++i) {
      const double x = -1 + 0.01 * i;
      f.grid.push_back(x);
      f.values.push_back(std::sin(5 * x) + x * x);
    }
    const InfConvolution a = inf_convolution(f, 0.05), b = inf_convolution(f, 0.2);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(b.result.values[i] <= a.result.values[i] + 1e-15);
      double brute = INFINITY;
      for (std::size_t j = 0; j < f.size(); ++j)
        brute = std::min(brute, f.values[j] + std::pow(f.grid[i] - f.grid[j], 2) / 0.05);
      CHECK(std::abs(a.result.values[i] - brute) < 1e-13);
    }
    CHECK_THROWS_AS(inf_convolution(f, 0.0), ArgumentError);
    CHECK_THROWS_AS(inf_convolution({{0, 0}, {1, 1}}, 1.0), ArgumentError);
  }

  TEST_CASE("space form volumes") {
    for (int n : {2, 3, 5}) {
      const double omega = std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1);
      CHECK(std::abs(space_form_volume(n, 0, 0.7) / (omega * std::pow(0.7, n)) - 1) < 1e-12);
    }
    for (double r : {0.1, 1.0, 3.0}) CHECK(std::abs(space_form_volume(2, 1, r) - 2 * pi * (1 - std::cos(r))) < 1e-10);
    CHECK(std::abs(space_form_volume(2, -1, 1.0) - 2 * pi * (std::cosh(1.0) - 1)) < 1e-10);
    CHECK(std::abs(space_form_volume(3, 1, pi) - 2 * pi * pi) < 1e-9);
    CHECK_THROWS_AS(space_form_volume(3, 1, 4.0), ArgumentError);
  }

  TEST_CASE("ricci of model metrics") {
    const EigenvalueVector cyl = ricci_conformal_radial(cylinder_metric(3), 0.7);
    CHECK(std::abs(cyl[0]) < 1e-12);
    CHECK(std::abs(cyl[1] - 1) < 1e-12);
    CHECK(std::abs(cyl[2] - 1) < 1e-12);
    for (int n : {3, 4})
      for (double r : {0.2, 0.7, 3.0}) {
        const EigenvalueVector s = ricci_conformal_radial(sphere_metric(n), r);
        for (int i = 0; i < n; ++i) CHECK(std::abs(s[i] - (n - 1)) < 1e-12);
      }
  }

  TEST_CASE("bishop-gromov ratios") {
    const auto grid = linear_grid(0.1, 2.0, 20);
    const BishopGromovReport flat = bishop_gromov_ratio(flat_metric(3), 0, grid);
    for (double q : flat.ratio) CHECK(std::abs(q - 1) < 1e-10);
    CHECK(flat.non_increasing);
    const BishopGromovReport sph = bishop_gromov_ratio(sphere_metric(3), 1, grid);
    for (double q : sph.ratio) CHECK(std::abs(q - 1) < 1e-8);
    CHECK(sph.ricci_ok);
    const BishopGromovReport bad = bishop_gromov_ratio(growth_metric(3), 0, grid);
    CHECK(!bad.ricci_ok);
    CHECK(bad.verdict == "unsupported");
    CHECK_THROWS_AS(bishop_gromov_ratio(flat_metric(3), 0, {0.5, 0.2}), ArgumentError);
  }

  TEST_CASE("sampled metric follows its source") {
    SampledFunction samples;
    for (int i = 0; i <= 400; ++i) {
      const double r = 0.005 * i;
      samples.grid.push_back(r);
      samples.values.push_back(std::log(2 / (1 + r * r)));
    }
    const RadialConformalMetric m = sampled_metric(3, samples);
    const EigenvalueVector ric = ricci_conformal_radial(m, 0.8);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ric[i] - 2) < 1e-3);
    CHECK_THROWS_AS(sampled_metric(3, {{0, 1, 2}, {0, 0, 0}}), ArgumentError);
  }
}
