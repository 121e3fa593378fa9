#include "sigmagreen/tensorid.hpp"

#include "sigmagreen/conformal.hpp"
#include "sigmagreen/symfunc.hpp"

#include <cmath>
#include <limits>

namespace sigmagreen {

namespace {

constexpr double kExactThreshold = 1e-11;

void check_point(const ScalarField& f, const Eigen::VectorXd& x, double h) {
  if (x.size() != f.n) throw ArgumentError("tensorid: point dimension mismatch");
  if (!(h > 0)) throw ArgumentError("tensorid: step must be positive");
  if (x.cwiseAbs().maxCoeff() + 4 * h > f.box) throw ArgumentError("tensorid: stencil leaves the evaluation box");
}

double positive_value(const ScalarField& f, const Eigen::VectorXd& x) {
  const double v = f.value(x);
  if (!(v > 0)) throw DomainError("tensorid: field is not positive at the evaluation point");
  return v;
}

}  // namespace

ScalarField constant_field(int n, double c) {
  if (!(c > 0)) throw ArgumentError("constant_field: value must be positive");
  return {n, "constant", 2.0, [c](const Eigen::VectorXd&) { return c; },
          [n](const Eigen::VectorXd&) { return Eigen::VectorXd(Eigen::VectorXd::Zero(n)); },
          [n](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Zero(n, n)); }};
}

ScalarField gaussian_field(int n) {
  return {n, "gaussian", 2.0, [](const Eigen::VectorXd& x) { return 1 + std::exp(-x.squaredNorm()); },
          [](const Eigen::VectorXd& x) { return Eigen::VectorXd(-2 * std::exp(-x.squaredNorm()) * x); },
          [n](const Eigen::VectorXd& x) {
            const double g = std::exp(-x.squaredNorm());
            return Eigen::MatrixXd(g * (4 * x * x.transpose() - 2 * Eigen::MatrixXd::Identity(n, n)));
          }};
}

ScalarField power_offset_field(int n, double p) {
  return {n, "power_offset", 2.0, [p](const Eigen::VectorXd& x) { return std::pow(1 + x.squaredNorm(), p); },
          [p](const Eigen::VectorXd& x) { return Eigen::VectorXd(2 * p * std::pow(1 + x.squaredNorm(), p - 1) * x); },
          [n, p](const Eigen::VectorXd& x) {
            const double q = 1 + x.squaredNorm();
            return Eigen::MatrixXd(2 * p * std::pow(q, p - 1) * Eigen::MatrixXd::Identity(n, n) +
                                   4 * p * (p - 1) * std::pow(q, p - 2) * x * x.transpose());
          }};
}

ScalarField exp_linear_field(const Eigen::VectorXd& a) {
  const int n = static_cast<int>(a.size());
  return {n, "exp_linear", 2.0, [a](const Eigen::VectorXd& x) { return std::exp(a.dot(x)); },
          [a](const Eigen::VectorXd& x) { return Eigen::VectorXd(std::exp(a.dot(x)) * a); },
          [a](const Eigen::VectorXd& x) { return Eigen::MatrixXd(std::exp(a.dot(x)) * a * a.transpose()); }};
}

ScalarField affine_field(const Eigen::VectorXd& a, double c) {
  const int n = static_cast<int>(a.size());
  return {n, "affine", 2.0, [a, c](const Eigen::VectorXd& x) { return c + a.dot(x); },
          [a](const Eigen::VectorXd&) { return a; },
          [n](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Zero(n, n)); }};
}

ScalarField quadratic_field(int n, double c, double q) {
  return {n, "quadratic", 2.0, [c, q](const Eigen::VectorXd& x) { return c + q * x.squaredNorm(); },
          [q](const Eigen::VectorXd& x) { return Eigen::VectorXd(2 * q * x); },
          [n, q](const Eigen::VectorXd&) { return Eigen::MatrixXd(2 * q * Eigen::MatrixXd::Identity(n, n)); }};
}

ScalarField field_by_name(const std::string& name, int n) {
  if (n < 3) throw ArgumentError("field_by_name: n must be >= 3");
  if (name == "constant") return constant_field(n, 1.0);
  if (name == "gaussian") return gaussian_field(n);
  if (name == "power_offset") return power_offset_field(n);
  if (name == "exp_linear") return exp_linear_field(Eigen::VectorXd::LinSpaced(n, 0.3, -0.2));
  if (name == "affine") return affine_field(Eigen::VectorXd::LinSpaced(n, 0.2, -0.1), 1.0);
  if (name == "quadratic") return quadratic_field(n, 1.0, 0.25);
  throw ArgumentError("field_by_name: unknown field '" + name + "'");
}

Eigen::MatrixXd newton_field(const ScalarField& u, int k, const Eigen::VectorXd& x) {
  const int n = u.n;
  const double v = positive_value(u, x);
  const PointJet jet = PointJet::flat(v, u.grad(x), SymmetricMatrix(u.hess(x)));
  const SymmetricMatrix A = std::pow(v, -4.0 / (n - 2)) * schouten_conformal(jet);
  return newton_tensor(k, A).matrix();
}

Eigen::VectorXd divergence_residual(const ScalarField& u, int k, const Eigen::VectorXd& x, double h) {
  const int n = u.n;
  if (n < 3) throw ArgumentError("divergence_residual: n must be >= 3");
  if (k < 0 || k > n - 1) throw ArgumentError("divergence_residual: need 0 <= k <= n-1");
  check_point(u, x, h);
  const double v = positive_value(u, x);
  const Eigen::VectorXd du = u.grad(x) / v;
  const Eigen::MatrixXd T = newton_field(u, k, x);
  const PointJet jet = PointJet::flat(v, u.grad(x), SymmetricMatrix(u.hess(x)));
  const double sk = sigma_matrix(k, std::pow(v, -4.0 / (n - 2)) * schouten_conformal(jet));

  Eigen::VectorXd div = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = h;
    const Eigen::MatrixXd dT = (newton_field(u, k, x + e) - newton_field(u, k, x - e)) / (2 * h);
    div += dT.row(j).transpose();
  }
  Eigen::VectorXd lower = n * (T.transpose() * du) - (n - k) * sk * du;
  return div + (2.0 / (n - 2)) * lower;
}

Eigen::MatrixXd w_tensor(const ScalarField& w, const Eigen::VectorXd& x) {
  const double v = positive_value(w, x);
  const Eigen::VectorXd g = w.grad(x);
  return v * w.hess(x) - 0.5 * g.squaredNorm() * Eigen::MatrixXd::Identity(w.n, w.n);
}

std::vector<Eigen::MatrixXd> curl_residual(const ScalarField& w, const Eigen::VectorXd& x, double h) {
  const int n = w.n;
  check_point(w, x, h);
  const double v = positive_value(w, x);
  const Eigen::VectorXd dw = w.grad(x);
  const Eigen::MatrixXd A = w_tensor(w, x);
  std::vector<Eigen::MatrixXd> dA(static_cast<std::size_t>(n));  // dA[i](l,j) = d_i A^l_j
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = h;
    dA[static_cast<std::size_t>(i)] = (w_tensor(w, x + e) - w_tensor(w, x - e)) / (2 * h);
  }
  const Eigen::VectorXd Adw = A.transpose() * dw;  // (w_s A^s_i)_i
  std::vector<Eigen::MatrixXd> res(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double rhs = dw[i] * A(l, j) - dw[j] * A(l, i);
        if (l == j) rhs -= Adw[i];
        if (l == i) rhs += Adw[j];
        res[static_cast<std::size_t>(l)](i, j) =
            dA[static_cast<std::size_t>(i)](l, j) - dA[static_cast<std::size_t>(j)](l, i) - rhs / v;
      }
  return res;
}

ResidualReport convergence_study(Identity identity, const ScalarField& field, int k, const Eigen::VectorXd& x,
                                 const std::vector<double>& h_ladder) {
  if (h_ladder.size() < 2) throw ArgumentError("convergence_study: need at least two steps");
  for (std::size_t i = 1; i < h_ladder.size(); ++i)
    if (!(h_ladder[i] < h_ladder[i - 1])) throw ArgumentError("convergence_study: ladder must be strictly decreasing");
  ResidualReport rep;
  rep.identity = identity;
  rep.k = k;
  rep.h = h_ladder;
  for (double h : h_ladder) {
    double m = 0;
    if (identity == Identity::Divergence) {
      m = divergence_residual(field, k, x, h).cwiseAbs().maxCoeff();
    } else {
      for (const auto& r : curl_residual(field, x, h)) m = std::max(m, r.cwiseAbs().maxCoeff());
    }
    rep.residual_max.push_back(m);
  }
  rep.exact = true;
  for (double m : rep.residual_max) rep.exact = rep.exact && m < kExactThreshold;
  if (rep.exact) {
    rep.order = std::numeric_limits<double>::infinity();
    return rep;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double N = static_cast<double>(h_ladder.size());
  for (std::size_t i = 0; i < h_ladder.size(); ++i) {
    const double lx = std::log(h_ladder[i]);
    const double ly = std::log(std::max(rep.residual_max[i], std::numeric_limits<double>::min()));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  rep.order = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  return rep;
}

}  // namespace sigmagreen
