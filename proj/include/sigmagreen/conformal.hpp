#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

namespace sigmagreen {

// Eigen-coefficients of the radial (0,2) Schouten tensor with respect to the flat metric.
struct ChiPair {
  double chi1 = 0;
  double chi2 = 0;
};

/// Second-order jet of a positive function at a point, together with the
/// background metric and its Schouten tensor there.
struct PointJet {
  int n = 0;
  double u = 0;
  Eigen::VectorXd grad;
  SymmetricMatrix hess;
  SymmetricMatrix background_schouten;
  SymmetricMatrix background_metric;

  // Flat background (g = I, A_g = 0).
  static PointJet flat(double u, Eigen::VectorXd grad, SymmetricMatrix hess);

  // Throws DomainError/ArgumentError on shape mismatch, u <= 0 or a metric that is not positive definite.
  void validate() const;
};

// (0,2) Schouten tensor of g_u = u^{4/(n-2)} g.
SymmetricMatrix schouten_conformal(const PointJet& jet);

// Generalized eigenvalues of the pencil (A, metric), ascending.
EigenvalueVector eigen_wrt(const SymmetricMatrix& A, const SymmetricMatrix& metric);

ChiPair radial_chi(int n, const RadialJet& jet);

// Eigenvalues of A_{g_u} w.r.t. g_u on flat space: u^{-4/(n-2)} (chi1 - chi2, chi1, ..., chi1).
// The radial direction comes first; the result is not sorted.
EigenvalueVector radial_eigenvalues(int n, const RadialJet& jet);

// Same eigenvalues from the log jet y = ln u, y_s, y_ss in s = ln r, in float128.
// Radial profiles close to r^{2-n} lose about (u / |u - c r^{2-n}|) digits in the double-jet path.
EigenvalueVector radial_eigenvalues_log(int n, double r, quad y, quad ys, quad yss);

// A_w = hess w - |dw|^2_g / (2 w) g + w A_g. Uses jet.u as w.
// On matching jets with w = u^{-2/(n-2)}: A_{g_u} = A_w / w.
SymmetricMatrix schouten_w(const PointJet& jet);

// Jet of the radial function at x = r e_1 on flat R^n.
PointJet embed_radial(int n, const RadialJet& jet);

}  // namespace sigmagreen
