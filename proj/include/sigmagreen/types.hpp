#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/float128.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sigmagreen {

// Extended precision used by the radial Dirichlet solver.
using quad = boost::multiprecision::float128;

/// A point of eigenvalue space R^n (n >= 2, finite entries).
class EigenvalueVector {
 public:
  EigenvalueVector() = default;
  explicit EigenvalueVector(Eigen::VectorXd values);
  EigenvalueVector(std::initializer_list<double> values);
  explicit EigenvalueVector(std::span<const double> values);

  // n copies of `value`.
  static EigenvalueVector constant(int n, double value);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const Eigen::VectorXd& values() const { return values_; }
  std::span<const double> span() const { return {values_.data(), static_cast<std::size_t>(values_.size())}; }
  double norm() const { return values_.norm(); }

 private:
  Eigen::VectorXd values_;
};

/// Real symmetric n x n matrix. Storage is always exactly symmetric:
/// construction mirrors the average of the upper and lower triangles.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(const Eigen::MatrixXd& m);

  static SymmetricMatrix identity(int n);
  static SymmetricMatrix zero(int n);
  static SymmetricMatrix diagonal(std::span<const double> d);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double trace() const { return m_.trace(); }

  // Ascending eigenvalues from a dense symmetric solver.
  Eigen::VectorXd eigenvalues() const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a);

 private:
  Eigen::MatrixXd m_;
};

/// Radial conformal factor and its first two derivatives at radius r.
struct RadialJet {
  double r = 0;
  double u = 0;
  double du = 0;
  double d2u = 0;

  // Throws DomainError unless r > 0, u > 0 and all entries are finite.
  void validate() const;
};

/// A sampled function of r on a strictly increasing grid.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> values;

  std::size_t size() const { return r.size(); }
  // Throws ArgumentError on length mismatch or non-increasing grid.
  void validate() const;
};

// Grids used throughout: strictly increasing, `count` >= 2 points.
std::vector<double> log_grid(double start, double stop, int count);
std::vector<double> linear_grid(double start, double stop, int count);

}  // namespace sigmagreen
