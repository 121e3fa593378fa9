#include "sigmagreen/cone.hpp"

#include "sigmagreen/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace sigmagreen {

namespace {

constexpr int kMaxCustomDim = 8;

// Average of h over all coordinate permutations.
SliceFunction symmetrize(int n, SliceFunction h) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto shared = std::make_shared<const SliceFunction>(std::move(h));
  auto shared_perms = std::make_shared<const std::vector<std::vector<int>>>(std::move(perms));

  SliceFunction out;
  out.name = shared->name;
  out.value = [shared, shared_perms, n](const Eigen::VectorXd& x) {
    double acc = 0;
    Eigen::VectorXd px(n);
    for (const auto& perm : *shared_perms) {
      for (int i = 0; i < n; ++i) px[i] = x[perm[static_cast<std::size_t>(i)]];
      acc += shared->value(px);
    }
    return acc / static_cast<double>(shared_perms->size());
  };
  out.gradient = [shared, shared_perms, n](const Eigen::VectorXd& x) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd px(n);
    for (const auto& perm : *shared_perms) {
      for (int i = 0; i < n; ++i) px[i] = x[perm[static_cast<std::size_t>(i)]];
      const Eigen::VectorXd g = shared->gradient(px);
      // d/dx_j h(Px) with (Px)_i = x_{perm[i]}: entry perm[i] receives g_i.
      for (int i = 0; i < n; ++i) acc[perm[static_cast<std::size_t>(i)]] += g[i];
    }
    return Eigen::VectorXd(acc / static_cast<double>(shared_perms->size()));
  };
  return out;
}

template <class Real>
Real real_pow(Real base, double e) {
  using std::pow;
  return pow(base, Real(e));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Interior:
      return "Interior";
    case Verdict::Boundary:
      return "Boundary";
    case Verdict::Outside:
      return "Outside";
  }
  return "?";
}

SliceFunction ball_slice(int n, double radius) {
  if (n < 2 || !(radius > 0)) throw ArgumentError("ball_slice: need n >= 2 and radius > 0");
  SliceFunction h;
  h.name = "ball(" + std::to_string(radius) + ")";
  h.value = [n, radius](const Eigen::VectorXd& x) {
    return radius * radius - (x.array() - 1.0 / n).matrix().squaredNorm();
  };
  h.gradient = [n](const Eigen::VectorXd& x) { return Eigen::VectorXd(-2.0 * (x.array() - 1.0 / n).matrix()); };
  return h;
}

Cone Cone::gamma_k(int n, int k) {
  if (n < 2) throw ArgumentError("gamma_k: dimension must be >= 2");
  if (k < 1 || k > n) throw ArgumentError("gamma_k: need 1 <= k <= n");
  return Cone(n, GammaK{k});
}

Cone Cone::custom(int n, SliceFunction h) {
  if (n < 2 || n > kMaxCustomDim) throw ArgumentError("custom cone: need 2 <= n <= 8");
  if (!h.value || !h.gradient) throw ArgumentError("custom cone: slice function needs value and gradient");
  Cone cone(n, Custom{std::make_shared<const SliceFunction>(symmetrize(n, std::move(h)))});
  cone.probe();
  return cone;
}

Cone Cone::open_up(double t) const {
  if (!(t >= 0.5 && t <= 1.0)) throw ArgumentError("open_up: t must lie in [1/2, 1]");
  return Cone(n_, Opened{std::make_shared<const Cone>(*this), t});
}

std::optional<int> Cone::k() const {
  if (const auto* g = std::get_if<GammaK>(&kind_)) return g->k;
  return std::nullopt;
}

std::string Cone::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, GammaK>) {
          os << "Gamma_" << kind.k << " (n=" << n_ << ")";
        } else if constexpr (std::is_same_v<K, Custom>) {
          os << "custom[" << kind.h->name << "] (n=" << n_ << ")";
        } else {
          os << kind.base->describe() << " opened at t=" << kind.t;
        }
      },
      kind_);
  return os.str();
}

void Cone::probe() const {
  const EigenvalueVector e = EigenvalueVector::constant(n_, 1.0);
  if (contains(e, 1e-12).verdict != Verdict::Interior)
    throw ArgumentError("cone does not contain the positive direction (1,...,1)");
  Eigen::VectorXd neg = Eigen::VectorXd::Ones(n_);
  neg[0] = -(n_ - 1) * (1 + 1e-6);
  if (contains(EigenvalueVector(neg), 1e-12).verdict == Verdict::Interior)
    throw ArgumentError("cone is not contained in {sigma_1 > 0}");

  if (const auto* c = std::get_if<Custom>(&kind_)) {
    // Midpoint concavity spot-check on random segments of the slice.
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 32; ++trial) {
      const Eigen::VectorXd a = sample_interior(*this, rng).values();
      const Eigen::VectorXd b = sample_interior(*this, rng).values();
      const double mid = c->h->value(0.5 * (a + b));
      const double avg = 0.5 * (c->h->value(a) + c->h->value(b));
      if (mid < avg - 1e-12 * (1 + std::abs(avg))) throw ArgumentError("custom cone: slice function fails concavity check");
    }
  }
}

ConeMembership Cone::contains(const EigenvalueVector& lam, double tol) const {
  if (lam.size() != n_) throw ArgumentError("contains: dimension mismatch");
  if (!(tol > 0)) throw ArgumentError("contains: tolerance must be positive");
  const double norm = lam.norm();
  if (norm == 0) throw ArgumentError("contains: the cone vertex 0 is excluded");

  return std::visit(
      [&](const auto& kind) -> ConeMembership {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, GammaK>) {
          std::vector<double> s(static_cast<std::size_t>(kind.k) + 1);
          elementary_symmetric<double>(lam.span(), s);
          double margin = std::numeric_limits<double>::infinity();
          bool any_small = false;
          double scale = 1;
          for (int j = 1; j <= kind.k; ++j) {
            scale *= norm;
            const double sj = s[static_cast<std::size_t>(j)] / scale;
            margin = std::min(margin, sj);
            if (std::abs(sj) <= tol) any_small = true;
          }
          if (margin > tol) return {Verdict::Interior, margin};
          if (margin >= -tol && any_small) return {Verdict::Boundary, margin};
          return {Verdict::Outside, margin};
        } else if constexpr (std::is_same_v<K, Custom>) {
          const double s1 = lam.values().sum();
          if (s1 <= 0) return {Verdict::Outside, s1 / norm - 1.0};
          const double h = kind.h->value(lam.values() / s1);
          if (h > tol) return {Verdict::Interior, h};
          if (h >= -tol) return {Verdict::Boundary, h};
          return {Verdict::Outside, h};
        } else {
          const double s1 = lam.values().sum();
          Eigen::VectorXd mapped = kind.t * lam.values();
          mapped.array() += (1 - kind.t) * s1;
          return kind.base->contains(EigenvalueVector(mapped), tol);
        }
      },
      kind_);
}

template <class Real>
Real Cone::slice_value(std::span<const Real> x, std::span<Real> grad) const {
  const std::size_t n = x.size();
  return std::visit(
      [&](const auto& kind) -> Real {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, GammaK>) {
          const int k = kind.k;
          std::vector<Real> s(static_cast<std::size_t>(k) + 1);
          elementary_symmetric<Real>(x, s);
          Real h = Real(1);
          for (int j = 1; j <= k; ++j) {
            const Real sj = s[static_cast<std::size_t>(j)];
            if (!(sj > 0)) {
              for (auto& g : grad) g = Real(0);
              return Real(0);
            }
            h *= real_pow<Real>(sj / Real(binomial(static_cast<int>(n), j)), 1.0 / (j * k));
          }
          if (!grad.empty()) {
            std::vector<Real> dsj(n);
            for (auto& g : grad) g = Real(0);
            for (int j = 1; j <= k; ++j) {
              sigma_gradient<Real>(j, x, dsj);
              const Real w = h / (Real(j * k) * s[static_cast<std::size_t>(j)]);
              for (std::size_t i = 0; i < n; ++i) grad[i] += w * dsj[i];
            }
          }
          return h;
        } else if constexpr (std::is_same_v<K, Custom>) {
          Eigen::VectorXd xd(static_cast<Eigen::Index>(n));
          for (std::size_t i = 0; i < n; ++i) xd[static_cast<Eigen::Index>(i)] = static_cast<double>(x[i]);
          if (!grad.empty()) {
            const Eigen::VectorXd g = kind.h->gradient(xd);
            for (std::size_t i = 0; i < n; ++i) grad[i] = Real(g[static_cast<Eigen::Index>(i)]);
          }
          return Real(kind.h->value(xd));
        } else {
          const Real t(kind.t);
          const Real c = t + Real(static_cast<double>(n)) * (Real(1) - t);
          Real s1 = Real(0);
          for (const auto& v : x) s1 += v;
          std::vector<Real> y(n);
          for (std::size_t i = 0; i < n; ++i) y[i] = (t * x[i] + (Real(1) - t) * s1) / c;
          std::vector<Real> g(grad.empty() ? 0 : n);
          const Real h = kind.base->template slice_value<Real>(y, g);
          if (!grad.empty()) {
            Real gs = Real(0);
            for (const auto& v : g) gs += v;
            for (std::size_t i = 0; i < n; ++i) grad[i] = (t * g[i] + (Real(1) - t) * gs) / c;
          }
          return h;
        }
      },
      kind_);
}

template double Cone::slice_value<double>(std::span<const double>, std::span<double>) const;
template quad Cone::slice_value<quad>(std::span<const quad>, std::span<quad>) const;

double mu_plus(const Cone& cone, double tol) {
  if (!(tol > 0)) throw ArgumentError("mu_plus: tolerance must be positive");
  const int n = cone.dim();
  auto inside = [&](double mu) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    v[0] = -mu;
    if (v.norm() == 0) return false;
    return cone.contains(EigenvalueVector(v), std::numeric_limits<double>::min()).verdict == Verdict::Interior;
  };
  double lo = 0.0, hi = (n - 1) + 1e-6;
  if (inside(hi)) throw DomainError("mu_plus: (-mu,1,...,1) stays inside beyond n-1; cone violates Gamma ⊂ Gamma_1");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DefiningFunction DefiningFunction::build(const Cone& cone, std::optional<double> alpha_override) {
  if (cone.is_gamma1()) return DefiningFunction(cone, Kind::SigmaOne, 1.0, 1.0);
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(cone.dim());
  e1[0] = 1.0;
  const bool e1_interior = cone.contains(EigenvalueVector(e1), 1e-12).verdict == Verdict::Interior;
  double alpha = e1_interior ? 1.0 : 0.5;
  if (alpha_override) {
    const double a = *alpha_override;
    if (!(a > 0 && a <= 1)) throw ArgumentError("build_defining_function: alpha must lie in (0, 1]");
    if (a == 1.0 && !e1_interior)
      throw ArgumentError("build_defining_function: alpha = 1 requires (1,0,...,0) inside the cone");
    alpha = a;
  }
  return DefiningFunction(cone, Kind::Slice, alpha, 1.0);
}

DefiningFunction DefiningFunction::sigma_root(const Cone& gamma_k, bool normalized) {
  const auto k = gamma_k.k();
  if (!k) throw ArgumentError("sigma_root: requires a Gamma_k cone");
  const double scale = normalized ? binomial(gamma_k.dim(), *k) : 1.0;
  return DefiningFunction(gamma_k, Kind::SigmaRoot, 1.0, scale);
}

std::string DefiningFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::SigmaOne:
      os << "sigma_1";
      break;
    case Kind::SigmaRoot:
      os << "(sigma_" << *cone_.k() << (scale_ != 1.0 ? "/C(n,k)" : "") << ")^(1/" << *cone_.k() << ")";
      break;
    case Kind::Slice:
      os << "slice-defined f, alpha=" << alpha_;
      break;
  }
  os << " on " << cone_.describe();
  return os.str();
}

template <class Real>
Real DefiningFunction::evaluate(std::span<const Real> lam, std::span<Real> grad) const {
  using std::pow;
  const std::size_t n = lam.size();
  switch (kind_) {
    case Kind::SigmaOne: {
      Real s = Real(0);
      for (const auto& v : lam) s += v;
      for (auto& g : grad) g = Real(1);
      return s;
    }
    case Kind::SigmaRoot: {
      const int k = *cone_.k();
      const Real sk = sigma_of<Real>(k, lam);
      const Real scale(scale_);
      const Real f = k == 1 ? sk / scale : pow(sk / scale, Real(1) / Real(k));
      if (!grad.empty()) {
        sigma_gradient<Real>(k, lam, grad);
        const Real w = k == 1 ? Real(1) / scale : f / (Real(k) * sk);
        for (auto& g : grad) g *= w;
      }
      return f;
    }
    case Kind::Slice: {
      Real s = Real(0);
      for (const auto& v : lam) s += v;
      std::vector<Real> x(n), dh(grad.empty() ? 0 : n);
      for (std::size_t i = 0; i < n; ++i) x[i] = lam[i] / s;
      const Real h = cone_.template slice_value<Real>(x, dh);
      const Real alpha(alpha_);
      const Real g = alpha_ == 1.0 ? h : pow(h, alpha);
      if (!grad.empty()) {
        const Real w = alpha_ == 1.0 ? Real(1) : alpha * pow(h, alpha - Real(1));
        Real dot = Real(0);
        for (std::size_t i = 0; i < n; ++i) dot += w * dh[i] * x[i];
        for (std::size_t i = 0; i < n; ++i) grad[i] = g + w * dh[i] - dot;
      }
      return s * g;
    }
  }
  return Real(0);
}

template double DefiningFunction::evaluate<double>(std::span<const double>, std::span<double>) const;
template quad DefiningFunction::evaluate<quad>(std::span<const quad>, std::span<quad>) const;

double DefiningFunction::value(const EigenvalueVector& lam) const {
  if (lam.size() != dim()) throw ArgumentError("defining function: dimension mismatch");
  const auto m = cone_.contains(lam, 1e-12);
  if (m.verdict == Verdict::Outside) throw DomainError("defining function: point outside the closed cone");
  if (cone_.contains(lam, std::numeric_limits<double>::min()).verdict != Verdict::Interior) return 0.0;
  return evaluate<double>(lam.span(), {});
}

Eigen::VectorXd DefiningFunction::gradient(const EigenvalueVector& lam) const {
  if (lam.size() != dim()) throw ArgumentError("defining function: dimension mismatch");
  if (cone_.contains(lam, std::numeric_limits<double>::min()).verdict != Verdict::Interior)
    throw DomainError("defining function: gradient requested outside the open cone");
  Eigen::VectorXd g(dim());
  evaluate<double>(lam.span(), std::span<double>(g.data(), static_cast<std::size_t>(g.size())));
  return g;
}

double ellipticity_at(const DefiningFunction& f, const EigenvalueVector& lam) {
  const Eigen::VectorXd g = f.gradient(lam);
  return g.minCoeff() / g.sum();
}

double ellipticity_ratio(const DefiningFunction& f, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw ArgumentError("ellipticity_ratio: sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < sample_count; ++i) worst = std::min(worst, ellipticity_at(f, sample_interior(f.cone(), rng)));
  return worst;
}

}  // namespace sigmagreen
