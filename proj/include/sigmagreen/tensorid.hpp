#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sigmagreen {

/// Smooth positive function on the box [-box, box]^n with exact first and second derivatives.
struct ScalarField {
  int n = 0;
  std::string name;
  double box = 2.0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess;
};

ScalarField constant_field(int n, double c);
// 1 + exp(-|x|^2)
ScalarField gaussian_field(int n);
// (1 + |x|^2)^p
ScalarField power_offset_field(int n, double p = 0.75);
// exp(a . x)
ScalarField exp_linear_field(const Eigen::VectorXd& a);
// c + a . x
ScalarField affine_field(const Eigen::VectorXd& a, double c);
// c + q |x|^2
ScalarField quadratic_field(int n, double c, double q);

// Catalog lookup: constant, gaussian, power_offset, exp_linear, affine, quadratic (default parameters).
ScalarField field_by_name(const std::string& name, int n);

// Newton tensor T_k of the Schouten tensor of u^{4/(n-2)} dx^2, as a (1,1) tensor of that metric.
Eigen::MatrixXd newton_field(const ScalarField& u, int k, const Eigen::VectorXd& x);

// R_r = d_j T_k^j_r + (2/(n-2)) (d_j u / u) [n T_k^j_r - (n-k) sigma_k delta^j_r] on flat space,
// with d_j T by central differences of step h.
Eigen::VectorXd divergence_residual(const ScalarField& u, int k, const Eigen::VectorXd& x, double h);

// A = w hess(w) - |dw|^2 / 2 I, the flat w-form Schouten tensor scaled by w.
Eigen::MatrixXd w_tensor(const ScalarField& w, const Eigen::VectorXd& x);

// res[l](i,j) = d_i A^l_j - d_j A^l_i - (1/w)[w_i A^l_j - w_j A^l_i - w_s A^s_i delta^l_j + w_s A^s_j delta^l_i].
// The field supplies w directly.
std::vector<Eigen::MatrixXd> curl_residual(const ScalarField& w, const Eigen::VectorXd& x, double h);

enum class Identity { Divergence, Curl };

struct ResidualReport {
  Identity identity = Identity::Divergence;
  int k = 0;
  std::vector<double> h;
  std::vector<double> residual_max;
  // Least-squares slope of log residual against log h; +inf when the identity is exact
  // (every residual below 1e-11).
  double order = 0;
  bool exact = false;
};

ResidualReport convergence_study(Identity identity, const ScalarField& field, int k, const Eigen::VectorXd& x,
                                 const std::vector<double>& h_ladder);

}  // namespace sigmagreen
