#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sigmagreen {

struct SampledFunction {
  std::vector<double> grid;
  std::vector<double> values;

  std::size_t size() const { return grid.size(); }
  void validate() const;
};

struct InfConvolution {
  SampledFunction result;
  // Grid abscissa attaining the infimum at each output point.
  std::vector<double> argmin;
};

// f_eps(x) = min_y f(y) + (x - y)^2 / eps over the grid, by the lower envelope of parabolas. O(N).
InfConvolution inf_convolution(const SampledFunction& f, double eps);

/// e^{2f} times the flat metric on R^n for a radial f with two derivatives.
struct RadialConformalMetric {
  int n = 3;
  std::string name;
  std::function<double(double)> f, df, d2f;
};

RadialConformalMetric flat_metric(int n);
// f = ln(2 / (1 + r^2)), the unit round sphere.
RadialConformalMetric sphere_metric(int n);
// f = -ln r
RadialConformalMetric cylinder_metric(int n);
// f = ln(1 + r^2)
RadialConformalMetric growth_metric(int n);
// Cubic B-spline interpolation of samples on a uniform grid (at least 5 points).
RadialConformalMetric sampled_metric(int n, const SampledFunction& f);
RadialConformalMetric metric_by_name(const std::string& name, int n);

// Ricci eigenvalues of e^{2f} dx^2 with respect to itself at radius r; radial direction first.
EigenvalueVector ricci_conformal_radial(const RadialConformalMetric& metric, double r);

// Volume of a geodesic ball of radius r in the simply connected space form of curvature kcurv.
double space_form_volume(int n, double kcurv, double r);

struct BishopGromovReport {
  std::vector<double> r;
  std::vector<double> geodesic_radius;
  std::vector<double> volume;
  std::vector<double> model_volume;
  std::vector<double> ratio;
  bool ricci_ok = false;
  // min over the grid and directions of Ric eigenvalue - (n-1) kcurv
  double ricci_min_margin = 0;
  bool non_increasing = false;
  // "non-increasing", "increasing somewhere" or "unsupported" (Ricci bound violated).
  std::string verdict;
};

BishopGromovReport bishop_gromov_ratio(const RadialConformalMetric& metric, double kcurv,
                                       const std::vector<double>& r_grid);

}  // namespace sigmagreen
