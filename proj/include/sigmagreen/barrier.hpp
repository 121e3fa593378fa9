#pragma once

#include "sigmagreen/cone.hpp"
#include "sigmagreen/conformal.hpp"

#include <vector>

namespace sigmagreen {

struct SuperSolutionParams {
  int n = 5;
  double mu = 1.4;
  double delta = 2.0;
  double a = 100;
  double r1 = 0.4;

  // Throws ArgumentError unless n >= 3, 1 < mu < delta < 3, a > 0, r1 > 0.
  void validate() const;
};

struct ConeSuperHarParams {
  int n = 5;
  double q = 1;
  double a = 1;
  double b = 1;

  // Throws ArgumentError unless n >= 3, 0 < q < n - 2, a > 0, b >= 0.
  void validate() const;
};

struct BarrierReport {
  std::vector<double> grid;
  std::vector<ConeMembership> memberships;
  double min_margin = 0;
  bool all_interior = false;
  // Supersolution check: min over the grid of (chi1 - chi2)/chi1 + mu, and of chi1.
  double key_ratio_min = 0;
  double chi1_min = 0;
  // ConeSuperHar check: min and max of f(lambda) r^2 phi^{4/(n-2)}.
  double lower_bound_ratio_min = 0;
  double lower_bound_ratio_max = 0;
};

// v_a(r) = (r^{1-mu} + a - r^{delta-mu})^{(n-2)/(mu-1)} with two derivatives.
RadialJet supersolution_jet(const SuperSolutionParams& p, double r);

// Classifies the flat-space Schouten eigenvalues of v_a against the cone on grid ⊂ (0, r1/2].
BarrierReport verify_supersolution(const SuperSolutionParams& p, const Cone& cone, const std::vector<double>& grid);

// phi(r) = a r^{-q} + b r^{-(n-2-q)}.
RadialJet conesuperhar_profile(const ConeSuperHarParams& p, double r);

// Ratio f(lambda(A_{g_phi})) r^2 phi^{4/(n-2)} on the grid; requires mu_plus(cone) > 1.
BarrierReport verify_conesuperhar(const ConeSuperHarParams& p, const DefiningFunction& f, const std::vector<double>& grid);

// v_a phi + a (1 - phi) with a quintic C^2 cutoff: phi = 1 on r <= 3 r1/5, 0 on r >= 4 r1/5.
RadialJet glue_barrier(const SuperSolutionParams& p, double r);

}  // namespace sigmagreen
