#pragma once

#include <cmath>
#include <random>

namespace sigmagreen {

namespace detail {

// Distance from e/n to the slice boundary along the unit direction d (sum d = 0), capped.
inline double slice_extent(const Cone& cone, const Eigen::VectorXd& d, double cap = 5.0) {
  const int n = cone.dim();
  const Eigen::VectorXd center = Eigen::VectorXd::Constant(n, 1.0 / n);
  auto inside = [&](double rho) {
    return cone.contains(EigenvalueVector(Eigen::VectorXd(center + rho * d)), 1e-300).verdict == Verdict::Interior;
  };
  if (inside(cap)) return cap;
  double lo = 0, hi = cap;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace detail

template <class Rng>
EigenvalueVector sample_interior(const Cone& cone, Rng& rng) {
  const int n = cone.dim();
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd d(n);
  for (;;) {
    for (int i = 0; i < n; ++i) d[i] = gauss(rng);
    d.array() -= d.mean();
    const double len = d.norm();
    if (len < 1e-12) continue;
    d /= len;
    const double extent = detail::slice_extent(cone, d);
    // Uniform in the (n-1)-dimensional slice, kept strictly inside.
    const double rho = extent * std::pow(unif(rng), 1.0 / (n - 1)) * (1.0 - 1e-9);
    EigenvalueVector lam(Eigen::VectorXd(Eigen::VectorXd::Constant(n, 1.0 / n) + rho * d));
    if (cone.contains(lam, 1e-300).verdict == Verdict::Interior) return lam;
  }
}

}  // namespace sigmagreen
