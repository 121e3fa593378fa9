#include "sigmagreen/conformal.hpp"

#include <cmath>

namespace sigmagreen {

PointJet PointJet::flat(double u, Eigen::VectorXd grad, SymmetricMatrix hess) {
  const int n = static_cast<int>(grad.size());
  return PointJet{n, u, std::move(grad), std::move(hess), SymmetricMatrix::zero(n), SymmetricMatrix::identity(n)};
}

void PointJet::validate() const {
  if (n < 3) throw ArgumentError("PointJet: dimension must be >= 3");
  if (grad.size() != n || hess.dim() != n || background_schouten.dim() != n || background_metric.dim() != n)
    throw ArgumentError("PointJet: shape mismatch");
  if (!(u > 0) || !std::isfinite(u)) throw DomainError("PointJet: value must be positive and finite");
  if (!grad.allFinite() || !hess.matrix().allFinite() || !background_schouten.matrix().allFinite())
    throw DomainError("PointJet: non-finite entries");
  Eigen::LLT<Eigen::MatrixXd> llt(background_metric.matrix());
  if (llt.info() != Eigen::Success) throw ArgumentError("PointJet: metric is not positive definite");
}

SymmetricMatrix schouten_conformal(const PointJet& jet) {
  jet.validate();
  const double n = jet.n;
  const double c = n - 2;
  const Eigen::MatrixXd& g = jet.background_metric.matrix();
  const double du2 = jet.grad.dot(g.llt().solve(jet.grad));
  Eigen::MatrixXd a = -(2 / c) / jet.u * jet.hess.matrix();
  a += (2 * n / (c * c)) / (jet.u * jet.u) * jet.grad * jet.grad.transpose();
  a -= (2 / (c * c)) / (jet.u * jet.u) * du2 * g;
  a += jet.background_schouten.matrix();
  return SymmetricMatrix(a);
}

EigenvalueVector eigen_wrt(const SymmetricMatrix& A, const SymmetricMatrix& metric) {
  if (A.dim() != metric.dim()) throw ArgumentError("eigen_wrt: dimension mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(metric.matrix());
  if (llt.info() != Eigen::Success) throw ArgumentError("eigen_wrt: metric is not positive definite");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(A.matrix(), metric.matrix(),
                                                                    Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) throw NumericError("eigen_wrt: eigensolver failed");
  return EigenvalueVector(Eigen::VectorXd(solver.eigenvalues()));
}

ChiPair radial_chi(int n, const RadialJet& jet) {
  if (n < 3) throw ArgumentError("radial_chi: dimension must be >= 3");
  jet.validate();
  const double c = n - 2.0;
  const double q = jet.du / jet.u;
  ChiPair out;
  out.chi1 = -(2 / c) * q / jet.r - (2 / (c * c)) * q * q;
  out.chi2 = (2 / c) * (jet.d2u - jet.du / jet.r) / jet.u - (2 * n / (c * c)) * q * q;
  return out;
}

EigenvalueVector radial_eigenvalues(int n, const RadialJet& jet) {
  const ChiPair chi = radial_chi(n, jet);
  const double s = std::pow(jet.u, -4.0 / (n - 2));
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, s * chi.chi1);
  v[0] = s * (chi.chi1 - chi.chi2);
  return EigenvalueVector(v);
}

EigenvalueVector radial_eigenvalues_log(int n, double r, quad y, quad ys, quad yss) {
  if (n < 3) throw ArgumentError("radial_eigenvalues_log: dimension must be >= 3");
  if (!(r > 0)) throw DomainError("radial_eigenvalues_log: r must be positive");
  const quad c = n - 2;
  const quad chi1 = -(2 / c) * ys - (2 / (c * c)) * ys * ys;
  const quad chi2 = (2 / c) * (yss - 2 * ys + ys * ys) - (2 * quad(n) / (c * c)) * ys * ys;
  const quad E = exp(-4 * y / c) / (quad(r) * quad(r));
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, static_cast<double>(E * chi1));
  v[0] = static_cast<double>(E * (chi1 - chi2));
  return EigenvalueVector(v);
}

SymmetricMatrix schouten_w(const PointJet& jet) {
  jet.validate();
  const Eigen::MatrixXd& g = jet.background_metric.matrix();
  const double dw2 = jet.grad.dot(g.llt().solve(jet.grad));
  Eigen::MatrixXd a = jet.hess.matrix() - dw2 / (2 * jet.u) * g + jet.u * jet.background_schouten.matrix();
  return SymmetricMatrix(a);
}

PointJet embed_radial(int n, const RadialJet& jet) {
  if (n < 3) throw ArgumentError("embed_radial: dimension must be >= 3");
  jet.validate();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
  grad[0] = jet.du;
  Eigen::MatrixXd hess = (jet.du / jet.r) * Eigen::MatrixXd::Identity(n, n);
  hess(0, 0) = jet.d2u;
  return PointJet::flat(jet.u, std::move(grad), SymmetricMatrix(hess));
}

}  // namespace sigmagreen
