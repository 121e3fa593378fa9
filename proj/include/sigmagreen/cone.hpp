#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace sigmagreen {

enum class Verdict { Interior, Boundary, Outside };

std::string to_string(Verdict v);

struct ConeMembership {
  Verdict verdict = Verdict::Outside;
  // Scale-normalized: min_j sigma_j / |lambda|^j for Gamma_k, h(lambda/sigma_1) for slice-defined cones.
  double signed_margin = 0;
};

/// A concave function on the slice {sigma_1 = 1}, positive inside the cone's
/// slice and zero on its boundary. `gradient` returns the ambient gradient.
struct SliceFunction {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::string name = "custom";
};

// h(x) = radius^2 - |x - e/n|^2. With radius^2 = 1 - 1/n this is the Gamma_2 slice.
SliceFunction ball_slice(int n, double radius);

/// Symmetric open convex cone Gamma_n ⊂ Gamma ⊂ Gamma_1.
class Cone {
 public:
  static Cone gamma_k(int n, int k);
  // The slice function is symmetrized over all coordinate permutations (n <= 8).
  static Cone custom(int n, SliceFunction h);
  // Gamma_t = { lambda : t lambda + (1 - t) sigma_1(lambda) e in Gamma }, t in [1/2, 1].
  Cone open_up(double t) const;

  int dim() const { return n_; }
  // k for the Gamma_k family, nullopt for custom or opened cones.
  std::optional<int> k() const;
  bool is_gamma1() const { return k() == 1; }
  std::string describe() const;

  ConeMembership contains(const EigenvalueVector& lam, double tol) const;

  // Concave slice function h of the cone; x is expected on {sigma_1 = 1}.
  // For Gamma_k: h = prod_{j<=k} (sigma_j / C(n,j))^{1/(j k)}.
  template <class Real>
  Real slice_value(std::span<const Real> x, std::span<Real> grad) const;

 private:
  struct GammaK {
    int k;
  };
  struct Custom {
    std::shared_ptr<const SliceFunction> h;
  };
  struct Opened {
    std::shared_ptr<const Cone> base;
    double t;
  };

  Cone(int n, std::variant<GammaK, Custom, Opened> kind) : n_(n), kind_(std::move(kind)) {}
  void probe() const;

  int n_ = 0;
  std::variant<GammaK, Custom, Opened> kind_;
};

// The unique mu with (-mu, 1, ..., 1) on the cone boundary, by bisection on [0, n-1+1e-6].
double mu_plus(const Cone& cone, double tol = 1e-13);

/// Degree-one homogeneous, symmetric, concave function on the cone with
/// positive partials, vanishing on the boundary.
class DefiningFunction {
 public:
  enum class Kind { SigmaOne, SigmaRoot, Slice };

  // f = sigma_1 g(lambda / sigma_1), g = h^alpha; alpha = 1 if (1,0,...,0) is interior,
  // otherwise 1/2 unless overridden. Gamma_1 gets f = sigma_1.
  static DefiningFunction build(const Cone& cone, std::optional<double> alpha_override = std::nullopt);
  // f = (sigma_k / C(n,k))^{1/k} (normalized, f(e) = 1) or sigma_k^{1/k}.
  static DefiningFunction sigma_root(const Cone& gamma_k, bool normalized = true);

  const Cone& cone() const { return cone_; }
  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  int dim() const { return cone_.dim(); }
  std::string describe() const;

  // f on the closed cone; 0 on boundary-verdict points, DomainError outside.
  double value(const EigenvalueVector& lam) const;
  // Gradient in the open cone; DomainError otherwise.
  Eigen::VectorXd gradient(const EigenvalueVector& lam) const;

  // Unchecked evaluation for interior points; writes the gradient if grad is non-empty.
  template <class Real>
  Real evaluate(std::span<const Real> lam, std::span<Real> grad) const;

 private:
  DefiningFunction(Cone cone, Kind kind, double alpha, double scale)
      : cone_(std::move(cone)), kind_(kind), alpha_(alpha), scale_(scale) {}

  Cone cone_;
  Kind kind_;
  double alpha_;
  double scale_;  // divisor inside the root for SigmaRoot
};

// Minimum over random interior samples of min_i d_i f / sum_j d_j f.
double ellipticity_ratio(const DefiningFunction& f, int sample_count, std::uint64_t seed);

// min_i d_i f / sum_j d_j f at one interior point.
double ellipticity_at(const DefiningFunction& f, const EigenvalueVector& lam);

// Random point of the open cone with sigma_1 = 1 (rejection sampling in the slice).
template <class Rng>
EigenvalueVector sample_interior(const Cone& cone, Rng& rng);

}  // namespace sigmagreen

#include "sigmagreen/detail/cone_sampling.hpp"
