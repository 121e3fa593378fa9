#include "sigmagreen/types.hpp"

#include "sigmagreen/errors.hpp"

#include <cmath>
#include <string>

namespace sigmagreen {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) throw NumericError(std::string(what) + ": non-finite entries");
}

}  // namespace

EigenvalueVector::EigenvalueVector(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() < 2) throw ArgumentError("EigenvalueVector: need n >= 2 entries");
  if (!values_.allFinite()) throw ArgumentError("EigenvalueVector: non-finite entry");
}

EigenvalueVector::EigenvalueVector(std::initializer_list<double> values)
    : EigenvalueVector(Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Eigen::Index>(values.size()))) {}

EigenvalueVector::EigenvalueVector(std::span<const double> values)
    : EigenvalueVector(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()))) {}

EigenvalueVector EigenvalueVector::constant(int n, double value) {
  return EigenvalueVector(Eigen::VectorXd::Constant(n, value));
}

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw ArgumentError("SymmetricMatrix: matrix must be square");
  require_finite(m, "SymmetricMatrix");
  m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(int n) { return SymmetricMatrix(Eigen::MatrixXd::Identity(n, n)); }

SymmetricMatrix SymmetricMatrix::zero(int n) { return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n)); }

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return SymmetricMatrix(m);
}

Eigen::VectorXd SymmetricMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("SymmetricMatrix: eigen-decomposition failed");
  return solver.eigenvalues();
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("SymmetricMatrix: dimension mismatch");
  return SymmetricMatrix(a.m_ + b.m_);
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) { return SymmetricMatrix(s * a.m_); }

void RadialJet::validate() const {
  if (!(std::isfinite(r) && std::isfinite(u) && std::isfinite(du) && std::isfinite(d2u)))
    throw DomainError("RadialJet: non-finite entry");
  if (!(r > 0)) throw DomainError("RadialJet: r must be positive");
  if (!(u > 0)) throw DomainError("RadialJet: u must be positive");
}

void RadialProfile::validate() const {
  if (r.size() != values.size()) throw ArgumentError("RadialProfile: grid and values differ in length");
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] > r[i - 1])) throw ArgumentError("RadialProfile: grid must be strictly increasing");
}

std::vector<double> log_grid(double start, double stop, int count) {
  if (count < 2 || !(start > 0) || !(stop > start)) throw ArgumentError("log_grid: need 0 < start < stop, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double a = std::log(start), b = std::log(stop);
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  g.front() = start;
  g.back() = stop;
  return g;
}

std::vector<double> linear_grid(double start, double stop, int count) {
  if (count < 2 || !(stop > start)) throw ArgumentError("linear_grid: need start < stop, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  g.back() = stop;
  return g;
}

}  // namespace sigmagreen
