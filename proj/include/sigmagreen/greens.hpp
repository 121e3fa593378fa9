#pragma once

#include "sigmagreen/cone.hpp"
#include "sigmagreen/conformal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sigmagreen {

/// u(r) = (C1 r^{-m} + C2)^{(n-2)/m}.
struct ExactFamily {
  int n = 5;
  double m = 0.5;
  double C1 = 1;
  double C2 = 1;

  void validate() const;
  double value(double r) const;
};

RadialJet exact_family_jet(const ExactFamily& fam, double r);

struct DegenerateReport {
  std::vector<double> grid;
  std::vector<ConeMembership> memberships;
  bool all_boundary = false;
  // max |signed margin| over the grid; for Gamma_k this is max |sigma_k| / |lambda|^k.
  double max_residual = 0;
  // Gamma_k only: min over the grid and j < k of sigma_j / |lambda|^j.
  std::optional<double> lower_sigma_min;
};

// Checks that the family sits on the cone boundary; needs m = mu_plus(cone) - 1 within 1e-8.
DegenerateReport verify_degenerate(const ExactFamily& fam, const Cone& cone, const std::vector<double>& grid,
                                   double tol = 1e-10);

/// U(r) = kappa (s / (1 + s^2 r^2))^{(n-2)/2}, normalized so f(lambda(A_{g_U})) = 1.
class Bubble {
 public:
  static Bubble make(const DefiningFunction& f);
  // kappa = 1; every Schouten eigenvalue equals 2.
  static Bubble unit(int n);

  int dim() const { return n_; }
  double kappa() const { return kappa_; }
  // Common Schouten eigenvalue of the kappa = 1 bubble.
  double c0() const { return c0_; }

  RadialJet jet(double r, double lam_scale = 1.0) const;
  // Schouten eigenvalues of g_U at r, radial first, evaluated in float128.
  EigenvalueVector eigenvalues(double r, double lam_scale = 1.0) const;

 private:
  Bubble(int n, double kappa, double c0) : n_(n), kappa_(kappa), c0_(c0) {}
  int n_;
  double kappa_;
  double c0_;
};

// Same kappa as Bubble::make(f).kappa().
double bubble_kappa(const DefiningFunction& f);

struct RadialBVP {
  DefiningFunction f;
  double epsilon = 1e-6;
  double r_in = 0.05;
  double r_out = 1.0;
  double bc_in = 1;
  double bc_out = 1;
  int grid_size = 400;
  int max_iterations = 200;

  int n() const { return f.dim(); }
  void validate() const;
};

struct SolverReport {
  RadialProfile profile;
  double epsilon = 0;
  double residual_max = 0;
  int newton_iterations = 0;
  bool converged = false;
  // Minimum scale-normalized cone margin over interior nodes.
  double eigen_margin_min = 0;
  std::string message;
};

// Damped Newton for f(lambda(A_{g_u})) = epsilon on a log-uniform grid with Dirichlet ends.
// The unknown is ln u; arithmetic is in float128. `initial` (u values on the grid) defaults to a power law.
SolverReport solve_regularized(const RadialBVP& bvp, const std::vector<double>& initial = {});

// Residual f(lambda) - epsilon at interior nodes for given u values on the solver grid.
std::vector<double> collocation_residual(const RadialBVP& bvp, const std::vector<double>& u);

std::vector<double> solver_grid(const RadialBVP& bvp);

struct ContinuationLevel {
  SolverReport report;
  std::optional<double> sup_error_abs;
  std::optional<double> sup_error_rel;
};

// Warm-started solves down a strictly decreasing positive ladder. Stops after the first
// non-converged level; solver exceptions are rethrown naming the failing level.
std::vector<ContinuationLevel> continuation(const RadialBVP& tmpl, const std::vector<double>& eps_ladder,
                                            const std::optional<ExactFamily>& reference = std::nullopt);

// lower <= u <= upper pointwise (slack 1e-12 relative); profiles must share the solver grid.
bool sandwich_check(const SolverReport& report, const RadialProfile& lower, const RadialProfile& upper);

// U_1(0)^{(n-2k)/(n-2)} times the integral over R^n of U_1^{(n+2k)/(n-2)}, U_1 the normalized bubble for f.
double mass_constant(int n, int k, const DefiningFunction& f, int quad_points = 64);

}  // namespace sigmagreen
