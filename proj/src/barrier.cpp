#include "sigmagreen/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sigmagreen {

namespace {

constexpr double kMembershipTol = 1e-12;

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw ArgumentError("barrier: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0) || !std::isfinite(grid[i])) throw DomainError("barrier: grid radii must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ArgumentError("barrier: grid must be strictly increasing");
  }
}

}  // namespace

void SuperSolutionParams::validate() const {
  if (n < 3) throw ArgumentError("supersolution: n must be >= 3");
  if (!(mu > 1 && mu < delta && delta < 3)) throw ArgumentError("supersolution: need 1 < mu < delta < 3");
  if (!(a > 0)) throw ArgumentError("supersolution: a must be positive");
  if (!(r1 > 0)) throw ArgumentError("supersolution: r1 must be positive");
}

void ConeSuperHarParams::validate() const {
  if (n < 3) throw ArgumentError("conesuperhar: n must be >= 3");
  if (!(q > 0 && q < n - 2)) throw ArgumentError("conesuperhar: need 0 < q < n - 2");
  if (!(a > 0) || !(b >= 0)) throw ArgumentError("conesuperhar: need a > 0, b >= 0");
}

RadialJet supersolution_jet(const SuperSolutionParams& p, double r) {
  p.validate();
  if (!(r > 0)) throw DomainError("supersolution: r must be positive");
  const double e1 = 1 - p.mu, e2 = p.delta - p.mu;
  const double B = std::pow(r, e1) + p.a - std::pow(r, e2);
  if (!(B > 0)) throw DomainError("supersolution: base r^{1-mu} + a - r^{delta-mu} is not positive");
  const double B1 = e1 * std::pow(r, e1 - 1) - e2 * std::pow(r, e2 - 1);
  const double B2 = e1 * (e1 - 1) * std::pow(r, e1 - 2) - e2 * (e2 - 1) * std::pow(r, e2 - 2);
  const double q = (p.n - 2) / (p.mu - 1);
  const double v = std::pow(B, q);
  RadialJet jet{r, v, q * v / B * B1, q * (q - 1) * v / (B * B) * B1 * B1 + q * v / B * B2};
  jet.validate();
  return jet;
}

BarrierReport verify_supersolution(const SuperSolutionParams& p, const Cone& cone, const std::vector<double>& grid) {
  p.validate();
  if (cone.dim() != p.n) throw ArgumentError("verify_supersolution: cone dimension mismatch");
  check_grid(grid);
  if (grid.back() > p.r1 / 2) throw DomainError("verify_supersolution: grid must lie in (0, r1/2]");

  BarrierReport rep;
  rep.grid = grid;
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.key_ratio_min = std::numeric_limits<double>::infinity();
  rep.chi1_min = std::numeric_limits<double>::infinity();
  rep.all_interior = true;
  for (double r : grid) {
    const RadialJet jet = supersolution_jet(p, r);
    const ChiPair chi = radial_chi(p.n, jet);
    const ConeMembership m = cone.contains(radial_eigenvalues(p.n, jet), kMembershipTol);
    rep.memberships.push_back(m);
    rep.min_margin = std::min(rep.min_margin, m.signed_margin);
    rep.all_interior = rep.all_interior && m.verdict == Verdict::Interior;
    rep.chi1_min = std::min(rep.chi1_min, chi.chi1);
    rep.key_ratio_min = std::min(rep.key_ratio_min, (chi.chi1 - chi.chi2) / chi.chi1 + p.mu);
  }
  return rep;
}

RadialJet conesuperhar_profile(const ConeSuperHarParams& p, double r) {
  p.validate();
  if (!(r > 0)) throw DomainError("conesuperhar: r must be positive");
  const double q1 = p.q, q2 = p.n - 2 - p.q;
  const double t1 = p.a * std::pow(r, -q1), t2 = p.b * std::pow(r, -q2);
  return RadialJet{r, t1 + t2, (-q1 * t1 - q2 * t2) / r, (q1 * (q1 + 1) * t1 + q2 * (q2 + 1) * t2) / (r * r)};
}

BarrierReport verify_conesuperhar(const ConeSuperHarParams& p, const DefiningFunction& f,
                                  const std::vector<double>& grid) {
  p.validate();
  if (f.dim() != p.n) throw ArgumentError("verify_conesuperhar: dimension mismatch");
  check_grid(grid);
  if (!(mu_plus(f.cone()) > 1 + 1e-9))
    throw PreconditionError("verify_conesuperhar: requires mu_plus > 1 so that (-1,1,...,1) lies in the cone");

  BarrierReport rep;
  rep.grid = grid;
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.lower_bound_ratio_min = std::numeric_limits<double>::infinity();
  rep.lower_bound_ratio_max = -std::numeric_limits<double>::infinity();
  rep.all_interior = true;
  for (double r : grid) {
    const RadialJet jet = conesuperhar_profile(p, r);
    const EigenvalueVector lam = radial_eigenvalues(p.n, jet);
    const ConeMembership m = f.cone().contains(lam, kMembershipTol);
    rep.memberships.push_back(m);
    rep.min_margin = std::min(rep.min_margin, m.signed_margin);
    rep.all_interior = rep.all_interior && m.verdict == Verdict::Interior;
    const double ratio = m.verdict == Verdict::Outside ? -std::numeric_limits<double>::infinity()
                                                       : f.value(lam) * r * r * std::pow(jet.u, 4.0 / (p.n - 2));
    rep.lower_bound_ratio_min = std::min(rep.lower_bound_ratio_min, ratio);
    rep.lower_bound_ratio_max = std::max(rep.lower_bound_ratio_max, ratio);
  }
  return rep;
}

RadialJet glue_barrier(const SuperSolutionParams& p, double r) {
  p.validate();
  if (!(r > 0)) throw DomainError("glue_barrier: r must be positive");
  const double lo = 0.6 * p.r1, width = 0.2 * p.r1;
  if (r <= lo) return supersolution_jet(p, r);
  if (r >= lo + width) return RadialJet{r, p.a, 0, 0};
  const double t = (r - lo) / width;
  const double phi = 1 - t * t * t * (10 - 15 * t + 6 * t * t);
  const double dphi = -30 * t * t * (t - 1) * (t - 1) / width;
  const double d2phi = -60 * t * (2 * t - 1) * (t - 1) / (width * width);
  const RadialJet v = supersolution_jet(p, r);
  const double diff = v.u - p.a;
  return RadialJet{r, v.u * phi + p.a * (1 - phi), v.du * phi + diff * dphi,
                   v.d2u * phi + 2 * v.du * dphi + diff * d2phi};
}

}  // namespace sigmagreen
