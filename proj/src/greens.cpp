#include "sigmagreen/greens.hpp"

#include "sigmagreen/symfunc.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sigmagreen {

void ExactFamily::validate() const {
  if (n < 3) throw ArgumentError("exact family: n must be >= 3");
  if (!(m > 0)) throw ArgumentError("exact family: m must be positive");
  if (!(C1 >= 0 && C2 >= 0 && C1 + C2 > 0)) throw ArgumentError("exact family: need C1, C2 >= 0 with C1 + C2 > 0");
}

double ExactFamily::value(double r) const { return exact_family_jet(*this, r).u; }

RadialJet exact_family_jet(const ExactFamily& fam, double r) {
  fam.validate();
  if (!(r > 0)) throw DomainError("exact family: r must be positive");
  const double p = (fam.n - 2) / fam.m;
  const double t = fam.C1 * std::pow(r, -fam.m);
  const double B = t + fam.C2;
  const double B1 = -fam.m * t / r;
  const double B2 = fam.m * (fam.m + 1) * t / (r * r);
  const double u = std::pow(B, p);
  return RadialJet{r, u, p * u / B * B1, p * (p - 1) * u / (B * B) * B1 * B1 + p * u / B * B2};
}

namespace {

// Schouten eigenvalues of the exact family in float128. In double the r^{2-n} part
// cancels to about r^{-m} times machine precision near the origin.
EigenvalueVector exact_family_eigenvalues(const ExactFamily& fam, double r) {
  const quad c = fam.n - 2, m = fam.m;
  const quad t = quad(fam.C1) * pow(quad(r), -m);
  const quad B = t + quad(fam.C2);
  // y = ln u as a function of s = ln r
  const quad y = (c / m) * log(B);
  const quad ys = -c * t / B;
  const quad yss = c * m * t * quad(fam.C2) / (B * B);
  return radial_eigenvalues_log(fam.n, r, y, ys, yss);
}

}  // namespace

DegenerateReport verify_degenerate(const ExactFamily& fam, const Cone& cone, const std::vector<double>& grid,
                                   double tol) {
  fam.validate();
  if (cone.dim() != fam.n) throw ArgumentError("verify_degenerate: dimension mismatch");
  if (std::abs(fam.m - (mu_plus(cone) - 1)) > 1e-8)
    throw PreconditionError("verify_degenerate: exponent m differs from mu_plus - 1; family is not degenerate here");

  DegenerateReport rep;
  rep.grid = grid;
  rep.all_boundary = true;
  const auto k = cone.k();
  if (k) rep.lower_sigma_min = std::numeric_limits<double>::infinity();
  for (double r : grid) {
    const EigenvalueVector lam = exact_family_eigenvalues(fam, r);
    const ConeMembership m = cone.contains(lam, tol);
    rep.memberships.push_back(m);
    rep.all_boundary = rep.all_boundary && m.verdict == Verdict::Boundary;
    if (k) {
      const std::vector<double> s = sigma_all(lam);
      const double norm = lam.norm();
      rep.max_residual = std::max(rep.max_residual, std::abs(s[static_cast<std::size_t>(*k)]) / std::pow(norm, *k));
      for (int j = 1; j < *k; ++j)
        rep.lower_sigma_min = std::min(*rep.lower_sigma_min, s[static_cast<std::size_t>(j)] / std::pow(norm, j));
    } else {
      rep.max_residual = std::max(rep.max_residual, std::abs(m.signed_margin));
    }
  }
  return rep;
}

namespace {

RadialJet raw_bubble_jet(int n, double kappa, double r, double s) {
  const double p = (n - 2) / 2.0;
  const double q = 1 + s * s * r * r;
  const double base = kappa * std::pow(s, p);
  const double u = base * std::pow(q, -p);
  const double du = base * (-p) * std::pow(q, -p - 1) * 2 * s * s * r;
  const double d2u = base * (p * (p + 1) * std::pow(q, -p - 2) * 4 * s * s * s * s * r * r -
                             p * std::pow(q, -p - 1) * 2 * s * s);
  return RadialJet{r, u, du, d2u};
}

}  // namespace

Bubble Bubble::make(const DefiningFunction& f) {
  const int n = f.dim();
  if (n < 3) throw ArgumentError("bubble: n must be >= 3");
  const EigenvalueVector lam = radial_eigenvalues(n, raw_bubble_jet(n, 1.0, 0.5, 1.0));
  const double c0 = lam.values().mean();
  double fc = 0;
  try {
    fc = f.value(EigenvalueVector::constant(n, c0));
  } catch (const std::exception& e) {
    throw NumericError(std::string("bubble: defining function evaluation failed: ") + e.what());
  }
  if (!(fc > 0) || !std::isfinite(fc)) throw NumericError("bubble: f(c0,...,c0) is not positive");
  return Bubble(n, std::pow(fc, (n - 2) / 4.0), c0);
}

RadialJet Bubble::jet(double r, double lam_scale) const {
  if (!(lam_scale > 0)) throw ArgumentError("bubble: lam_scale must be positive");
  if (!(r > 0)) throw DomainError("bubble: r must be positive");
  return raw_bubble_jet(n_, kappa_, r, lam_scale);
}

Bubble Bubble::unit(int n) {
  if (n < 3) throw ArgumentError("bubble: n must be >= 3");
  return Bubble(n, 1.0, 2.0);
}

EigenvalueVector Bubble::eigenvalues(double r, double lam_scale) const {
  if (!(lam_scale > 0)) throw ArgumentError("bubble: lam_scale must be positive");
  if (!(r > 0)) throw DomainError("bubble: r must be positive");
  const quad c = n_ - 2, s = lam_scale, t = s * s * quad(r) * quad(r);
  const quad y = log(quad(kappa_)) + (c / 2) * (log(s) - log1p(t));
  const quad ys = -c * t / (1 + t);
  const quad yss = -2 * c * t / ((1 + t) * (1 + t));
  return radial_eigenvalues_log(n_, r, y, ys, yss);
}

double bubble_kappa(const DefiningFunction& f) { return Bubble::make(f).kappa(); }

void RadialBVP::validate() const {
  if (n() < 3) throw ArgumentError("radial BVP: n must be >= 3");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw ArgumentError("radial BVP: epsilon must be positive");
  if (!(r_in > 0 && r_in < r_out) || !std::isfinite(r_out)) throw ArgumentError("radial BVP: need 0 < r_in < r_out");
  if (!(bc_in > 0 && bc_out > 0)) throw ArgumentError("radial BVP: boundary values must be positive");
  if (grid_size < 5) throw ArgumentError("radial BVP: grid_size must be >= 5");
  if (max_iterations < 1) throw ArgumentError("radial BVP: max_iterations must be >= 1");
}

std::vector<double> solver_grid(const RadialBVP& bvp) {
  bvp.validate();
  return log_grid(bvp.r_in, bvp.r_out, bvp.grid_size);
}

namespace {

using std::exp;
using std::log;

constexpr double kResidualTol = 1e-10;
constexpr double kDampingFloor = 1.0 / (1 << 20);

struct Collocation {
  const RadialBVP& bvp;
  int N;
  quad h;
  std::vector<quad> s;

  explicit Collocation(const RadialBVP& b) : bvp(b), N(b.grid_size) {
    const quad s0 = log(quad(b.r_in)), s1 = log(quad(b.r_out));
    h = (s1 - s0) / (N - 1);
    s.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) s[static_cast<std::size_t>(i)] = s0 + h * i;
  }

  // Fills F (size N-2) and, when requested, the tridiagonal Jacobian (lower, diag, upper).
  // Returns false when some node leaves the open cone; margin receives the min cone margin.
  bool eval(const std::vector<quad>& y, std::vector<quad>& F, std::vector<quad>* lo, std::vector<quad>* di,
            std::vector<quad>* up, double* margin) const {
    const int n = bvp.n();
    const quad c = n - 2;
    const quad eps(bvp.epsilon);
    std::vector<quad> lam(static_cast<std::size_t>(n)), grad(static_cast<std::size_t>(n));
    Eigen::VectorXd lam_d(n);
    double min_margin = std::numeric_limits<double>::infinity();
    F.assign(static_cast<std::size_t>(N - 2), quad(0));
    for (int i = 1; i < N - 1; ++i) {
      const auto I = static_cast<std::size_t>(i);
      const quad ys = (y[I + 1] - y[I - 1]) / (2 * h);
      const quad yss = (y[I + 1] - 2 * y[I] + y[I - 1]) / (h * h);
      const quad b = -(2 / c) * ys - (2 / (c * c)) * ys * ys;
      const quad chi2 = (2 / c) * (yss - 2 * ys + ys * ys) - (2 * quad(n) / (c * c)) * ys * ys;
      const quad a = b - chi2;
      const quad E = exp(-4 * y[I] / c - 2 * s[I]);
      lam[0] = E * a;
      for (int l = 1; l < n; ++l) lam[static_cast<std::size_t>(l)] = E * b;
      for (int l = 0; l < n; ++l) lam_d[l] = static_cast<double>(lam[static_cast<std::size_t>(l)]);
      if (!lam_d.allFinite() || lam_d.norm() == 0) return false;
      const ConeMembership m = bvp.f.cone().contains(EigenvalueVector(lam_d), std::numeric_limits<double>::min());
      if (m.verdict != Verdict::Interior) return false;
      min_margin = std::min(min_margin, m.signed_margin);
      const bool want_j = lo != nullptr;
      const quad fv = bvp.f.evaluate<quad>(lam, want_j ? std::span<quad>(grad) : std::span<quad>());
      F[I - 1] = fv - eps;
      if (!want_j) continue;
      const quad g0 = grad[0];
      quad gt = 0;
      for (int l = 1; l < n; ++l) gt += grad[static_cast<std::size_t>(l)];
      const quad db = -2 / c - 4 * ys / (c * c);
      const quad dchi2_ys = (2 / c) * (2 * ys - 2) - 4 * quad(n) * ys / (c * c);
      const quad dF_ys = E * (g0 * (db - dchi2_ys) + gt * db);
      const quad dF_yss = E * g0 * (-2 / c);
      (*lo)[I - 1] = -dF_ys / (2 * h) + dF_yss / (h * h);
      (*di)[I - 1] = -2 * dF_yss / (h * h) - 4 / c * fv;
      (*up)[I - 1] = dF_ys / (2 * h) + dF_yss / (h * h);
    }
    if (margin) *margin = min_margin;
    return true;
  }
};

quad max_abs(const std::vector<quad>& v) {
  quad m = 0;
  for (const auto& x : v) m = std::max(m, quad(abs(x)));
  return m;
}

// Thomas algorithm; rhs is overwritten with the solution.
void solve_tridiagonal(std::vector<quad> lo, std::vector<quad> di, std::vector<quad> up, std::vector<quad>& rhs) {
  const std::size_t M = di.size();
  for (std::size_t i = 1; i < M; ++i) {
    if (di[i - 1] == 0) throw NumericError("radial solver: singular Jacobian");
    const quad w = lo[i] / di[i - 1];
    di[i] -= w * up[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  if (di[M - 1] == 0) throw NumericError("radial solver: singular Jacobian");
  rhs[M - 1] /= di[M - 1];
  for (std::size_t i = M - 1; i-- > 0;) rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / di[i];
}

SolverReport make_report(const Collocation& col, const std::vector<quad>& y, const std::vector<quad>& F,
                         double margin, int iterations, bool converged, std::string message) {
  SolverReport rep;
  rep.epsilon = col.bvp.epsilon;
  rep.profile.r = solver_grid(col.bvp);
  rep.profile.values.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) rep.profile.values[i] = static_cast<double>(exp(y[i]));
  rep.residual_max = static_cast<double>(max_abs(F));
  rep.newton_iterations = iterations;
  rep.converged = converged;
  rep.eigen_margin_min = margin;
  rep.message = std::move(message);
  return rep;
}

}  // namespace

std::vector<double> collocation_residual(const RadialBVP& bvp, const std::vector<double>& u) {
  bvp.validate();
  if (static_cast<int>(u.size()) != bvp.grid_size) throw ArgumentError("collocation_residual: size mismatch");
  Collocation col(bvp);
  std::vector<quad> y(u.size()), F;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > 0)) throw DomainError("collocation_residual: u must be positive");
    y[i] = log(quad(u[i]));
  }
  if (!col.eval(y, F, nullptr, nullptr, nullptr, nullptr))
    throw DomainError("collocation_residual: profile leaves the open cone");
  std::vector<double> out(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) out[i] = static_cast<double>(F[i]);
  return out;
}

SolverReport solve_regularized(const RadialBVP& bvp, const std::vector<double>& initial) {
  bvp.validate();
  const Collocation col(bvp);
  const int N = bvp.grid_size;
  std::vector<quad> y(static_cast<std::size_t>(N));
  if (initial.empty()) {
    const quad y0 = log(quad(bvp.bc_in)), y1 = log(quad(bvp.bc_out));
    for (int i = 0; i < N; ++i) y[static_cast<std::size_t>(i)] = y0 + (y1 - y0) * i / (N - 1);
  } else {
    if (static_cast<int>(initial.size()) != N) throw ArgumentError("solve_regularized: initial guess size mismatch");
    for (int i = 0; i < N; ++i) {
      if (!(initial[static_cast<std::size_t>(i)] > 0)) throw DomainError("solve_regularized: initial guess must be positive");
      y[static_cast<std::size_t>(i)] = log(quad(initial[static_cast<std::size_t>(i)]));
    }
    y.front() = log(quad(bvp.bc_in));
    y.back() = log(quad(bvp.bc_out));
  }

  const std::size_t M = static_cast<std::size_t>(N - 2);
  std::vector<quad> F, lo(M), di(M), up(M), Fn;
  double margin = 0;
  if (!col.eval(y, F, &lo, &di, &up, &margin))
    throw PreconditionError("solve_regularized: initial profile is not inside the cone at every node");

  const quad tol = quad(kResidualTol) * (1 + quad(bvp.epsilon));
  for (int it = 0; it < bvp.max_iterations; ++it) {
    const quad res = max_abs(F);
    if (res < tol) return make_report(col, y, F, margin, it, true, "converged");

    std::vector<quad> dy(M);
    for (std::size_t i = 0; i < M; ++i) dy[i] = -F[i];
    solve_tridiagonal(lo, di, up, dy);

    bool any_interior = false;
    bool accepted = false;
    std::vector<quad> yn;
    for (double t = 1.0; t >= kDampingFloor; t /= 2) {
      yn = y;
      for (std::size_t i = 0; i < M; ++i) yn[i + 1] += quad(t) * dy[i];
      double mn = 0;
      if (!col.eval(yn, Fn, nullptr, nullptr, nullptr, &mn)) continue;
      any_interior = true;
      if (max_abs(Fn) < res) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (!any_interior)
        throw ConeExitError("solve_regularized: every damped step leaves the cone (damping floor 2^-20 reached)");
      return make_report(col, y, F, margin, it, false, "line search failed to decrease the residual");
    }
    y = std::move(yn);
    col.eval(y, F, &lo, &di, &up, &margin);
  }
  const bool ok = max_abs(F) < tol;
  return make_report(col, y, F, margin, bvp.max_iterations, ok, ok ? "converged" : "iteration limit reached");
}

std::vector<ContinuationLevel> continuation(const RadialBVP& tmpl, const std::vector<double>& eps_ladder,
                                            const std::optional<ExactFamily>& reference) {
  if (eps_ladder.empty()) throw ArgumentError("continuation: empty ladder");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0)) throw ArgumentError("continuation: ladder entries must be positive");
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
      throw ArgumentError("continuation: ladder must be strictly decreasing");
  }
  std::vector<ContinuationLevel> out;
  std::vector<double> warm;
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    RadialBVP bvp = tmpl;
    bvp.epsilon = eps_ladder[i];
    ContinuationLevel level;
    const std::string where = "continuation level " + std::to_string(i) + " (epsilon=" + std::to_string(eps_ladder[i]) + "): ";
    try {
      level.report = solve_regularized(bvp, warm);
    } catch (const ConeExitError& e) {
      throw ConeExitError(where + e.what());
    } catch (const NumericError& e) {
      throw NumericError(where + e.what());
    } catch (const PreconditionError& e) {
      throw PreconditionError(where + e.what());
    }
    if (reference) {
      double abs_err = 0, rel_err = 0;
      const auto& pr = level.report.profile;
      for (std::size_t j = 0; j < pr.size(); ++j) {
        const double ex = reference->value(pr.r[j]);
        abs_err = std::max(abs_err, std::abs(pr.values[j] - ex));
        rel_err = std::max(rel_err, std::abs(pr.values[j] - ex) / ex);
      }
      level.sup_error_abs = abs_err;
      level.sup_error_rel = rel_err;
    }
    warm = level.report.profile.values;
    const bool ok = level.report.converged;
    out.push_back(std::move(level));
    if (!ok) break;
  }
  return out;
}

bool sandwich_check(const SolverReport& report, const RadialProfile& lower, const RadialProfile& upper) {
  const auto& u = report.profile;
  for (const RadialProfile* p : {&lower, &upper}) {
    p->validate();
    if (p->size() != u.size()) throw ArgumentError("sandwich_check: grid mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::abs(p->r[i] - u.r[i]) > 1e-12 * u.r[i]) throw ArgumentError("sandwich_check: grid mismatch");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double slack = 1e-12 * std::max(1.0, std::abs(u.values[i]));
    if (lower.values[i] > u.values[i] + slack || u.values[i] > upper.values[i] + slack) return false;
  }
  return true;
}

double mass_constant(int n, int k, const DefiningFunction& f, int quad_points) {
  if (f.dim() != n) throw ArgumentError("mass_constant: dimension mismatch");
  if (n < 3) throw ArgumentError("mass_constant: n must be >= 3");
  if (k < 1 || 2 * k >= n) throw PreconditionError("mass_constant: requires 1 <= k < n/2");
  if (quad_points < 1) throw ArgumentError("mass_constant: quad_points must be >= 1");
  const double kappa = bubble_kappa(f);
  const double expo = (n + 2.0 * k) / 2.0;
  // r = t / (1 - t) maps [0, 1) onto [0, inf).
  auto integrand = [&](double t) {
    if (t >= 1) return 0.0;
    const double r = t / (1 - t);
    return std::pow(r, n - 1) * std::pow(1 + r * r, -expo) / ((1 - t) * (1 - t));
  };
  auto composite = [&](int panels) {
    double acc = 0;
    for (int p = 0; p < panels; ++p)
      acc += boost::math::quadrature::gauss<double, 20>::integrate(integrand, double(p) / panels, double(p + 1) / panels);
    return acc;
  };
  int panels = quad_points;
  double prev = composite(panels);
  for (int it = 0; it < 16; ++it) {
    panels *= 2;
    const double next = composite(panels);
    const bool done = std::abs(next - prev) <= 1e-12 * std::abs(next);
    prev = next;
    if (done) break;
  }
  const double sphere = 2 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
  return std::pow(kappa, 2.0 * n / (n - 2)) * sphere * prev;
}

}  // namespace sigmagreen
