#include "sigmagreen/volcomp.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

namespace sigmagreen {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr double kMonotoneSlack = 1e-8;

double sphere_area(int n) { return 2 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0); }

template <class F>
double integrate(F&& f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, kQuadTol);
}

}  // namespace

void SampledFunction::validate() const {
  if (grid.size() != values.size()) throw ArgumentError("sampled function: length mismatch");
  if (grid.empty()) throw ArgumentError("sampled function: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) throw ArgumentError("sampled function: non-finite entry");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ArgumentError("sampled function: grid must be strictly increasing");
  }
}

InfConvolution inf_convolution(const SampledFunction& f, double eps) {
  f.validate();
  if (!(eps > 0)) throw ArgumentError("inf_convolution: eps must be positive");
  const std::size_t N = f.size();
  const auto& y = f.grid;
  // Parabola q -> f(q) + (x - y_q)^2 / eps; v holds envelope indices, z the breakpoints.
  auto cross = [&](std::size_t p, std::size_t q) {
    return ((f.values[q] * eps + y[q] * y[q]) - (f.values[p] * eps + y[p] * y[p])) / (2 * (y[q] - y[p]));
  };
  std::vector<std::size_t> v(N);
  std::vector<double> z(N + 1);
  std::size_t k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (std::size_t q = 1; q < N; ++q) {
    double s = cross(v[k], q);
    while (s <= z[k]) {
      --k;
      s = cross(v[k], q);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  InfConvolution out;
  out.result.grid = y;
  out.result.values.resize(N);
  out.argmin.resize(N);
  k = 0;
  for (std::size_t i = 0; i < N; ++i) {
    while (z[k + 1] < y[i]) ++k;
    const std::size_t q = v[k];
    const double d = y[i] - y[q];
    out.result.values[i] = f.values[q] + d * d / eps;
    out.argmin[i] = y[q];
  }
  return out;
}

RadialConformalMetric flat_metric(int n) {
  return {n, "flat", [](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

RadialConformalMetric sphere_metric(int n) {
  return {n, "sphere", [](double r) { return std::log(2 / (1 + r * r)); },
          [](double r) { return -2 * r / (1 + r * r); },
          [](double r) { return -2 * (1 - r * r) / ((1 + r * r) * (1 + r * r)); }};
}

RadialConformalMetric cylinder_metric(int n) {
  return {n, "cylinder", [](double r) { return -std::log(r); }, [](double r) { return -1 / r; },
          [](double r) { return 1 / (r * r); }};
}

RadialConformalMetric growth_metric(int n) {
  return {n, "growth", [](double r) { return std::log(1 + r * r); }, [](double r) { return 2 * r / (1 + r * r); },
          [](double r) { return 2 * (1 - r * r) / ((1 + r * r) * (1 + r * r)); }};
}

RadialConformalMetric sampled_metric(int n, const SampledFunction& f) {
  f.validate();
  if (f.size() < 5) throw ArgumentError("sampled_metric: need at least 5 samples");
  const double h = (f.grid.back() - f.grid.front()) / static_cast<double>(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::abs(f.grid[i] - (f.grid.front() + h * static_cast<double>(i))) > 1e-9 * (1 + std::abs(f.grid[i])))
      throw ArgumentError("sampled_metric: grid must be uniform");
  auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
      f.values.begin(), f.values.end(), f.grid.front(), h);
  return {n, "sampled", [spline](double r) { return (*spline)(r); },
          [spline](double r) { return spline->prime(r); }, [spline](double r) { return spline->double_prime(r); }};
}

RadialConformalMetric metric_by_name(const std::string& name, int n) {
  if (n < 2) throw ArgumentError("metric: n must be >= 2");
  if (name == "flat") return flat_metric(n);
  if (name == "sphere") return sphere_metric(n);
  if (name == "cylinder") return cylinder_metric(n);
  if (name == "growth") return growth_metric(n);
  throw ArgumentError("metric: unknown name '" + name + "'");
}

EigenvalueVector ricci_conformal_radial(const RadialConformalMetric& metric, double r) {
  if (!(r > 0)) throw DomainError("ricci: r must be positive");
  const int n = metric.n;
  const double f = metric.f(r), f1 = metric.df(r), f2 = metric.d2f(r);
  if (!std::isfinite(f) || !std::isfinite(f1) || !std::isfinite(f2)) throw DomainError("ricci: f not finite at r");
  const double scale = std::exp(-2 * f);
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, scale * (-f2 - (2 * n - 3) * f1 / r - (n - 2) * f1 * f1));
  v[0] = scale * (-(n - 1) * (f2 + f1 / r));
  return EigenvalueVector(v);
}

double space_form_volume(int n, double kcurv, double r) {
  if (n < 2) throw ArgumentError("space_form_volume: n must be >= 2");
  if (!(r > 0)) throw ArgumentError("space_form_volume: r must be positive");
  if (kcurv > 0 && r > std::numbers::pi / std::sqrt(kcurv) * (1 + 1e-14))
    throw ArgumentError("space_form_volume: r exceeds the diameter of the positively curved space form");
  if (kcurv == 0) return sphere_area(n) * std::pow(r, n) / n;
  const double c = std::sqrt(std::abs(kcurv));
  auto sn = [&](double t) { return kcurv > 0 ? std::sin(c * t) / c : std::sinh(c * t) / c; };
  return sphere_area(n) * integrate([&](double t) { return std::pow(sn(t), n - 1); }, 0.0, r);
}

BishopGromovReport bishop_gromov_ratio(const RadialConformalMetric& metric, double kcurv,
                                       const std::vector<double>& r_grid) {
  const int n = metric.n;
  if (r_grid.empty()) throw ArgumentError("bishop_gromov: empty grid");
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    if (!(r_grid[i] > 0) || (i > 0 && !(r_grid[i] > r_grid[i - 1])))
      throw ArgumentError("bishop_gromov: grid must be positive and strictly increasing");

  BishopGromovReport rep;
  rep.r = r_grid;
  rep.ricci_min_margin = std::numeric_limits<double>::infinity();
  const double bound = (n - 1) * kcurv;
  for (double r : r_grid) {
    const Eigen::VectorXd ric = ricci_conformal_radial(metric, r).values();
    rep.ricci_min_margin = std::min(rep.ricci_min_margin, ric.minCoeff() - bound);
  }
  rep.ricci_ok = rep.ricci_min_margin >= -1e-8 * std::max(1.0, std::abs(bound));

  double prev_r = 0, s = 0, vol = 0;
  for (double r : r_grid) {
    s += integrate([&](double t) { return std::exp(metric.f(t)); }, prev_r, r);
    vol += sphere_area(n) * integrate([&](double t) { return std::exp(n * metric.f(t)) * std::pow(t, n - 1); }, prev_r, r);
    prev_r = r;
    const double model = space_form_volume(n, kcurv, s);
    rep.geodesic_radius.push_back(s);
    rep.volume.push_back(vol);
    rep.model_volume.push_back(model);
    rep.ratio.push_back(vol / model);
  }
  rep.non_increasing = true;
  for (std::size_t i = 1; i < rep.ratio.size(); ++i)
    rep.non_increasing = rep.non_increasing && rep.ratio[i] <= rep.ratio[i - 1] + kMonotoneSlack;
  rep.verdict = !rep.ricci_ok ? "unsupported" : rep.non_increasing ? "non-increasing" : "increasing somewhere";
  return rep;
}

}  // namespace sigmagreen
