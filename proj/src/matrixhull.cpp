#include "sigmagreen/matrixhull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sigmagreen {

namespace {

constexpr double kSupportThreshold = 1e-12;

// Kuhn's augmenting-path matching on entries above the threshold; rows and columns scanned in order.
bool try_augment(const Eigen::MatrixXd& R, int row, std::vector<int>& col_owner, std::vector<char>& seen) {
  const int n = static_cast<int>(R.rows());
  for (int c = 0; c < n; ++c) {
    if (R(row, c) <= kSupportThreshold || seen[static_cast<std::size_t>(c)]) continue;
    seen[static_cast<std::size_t>(c)] = 1;
    const int owner = col_owner[static_cast<std::size_t>(c)];
    if (owner < 0 || try_augment(R, owner, col_owner, seen)) {
      col_owner[static_cast<std::size_t>(c)] = row;
      return true;
    }
  }
  return false;
}

bool perfect_matching(const Eigen::MatrixXd& R, std::vector<int>& perm) {
  const int n = static_cast<int>(R.rows());
  std::vector<int> col_owner(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    if (!try_augment(R, r, col_owner, seen)) return false;
  }
  perm.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) perm[static_cast<std::size_t>(col_owner[static_cast<std::size_t>(c)])] = c;
  return true;
}

void caratheodory_prune(WeightedPermutationList& items, int n) {
  const std::size_t bound = static_cast<std::size_t>(n * n - 2 * n + 2);
  while (items.size() > bound) {
    const int K = static_cast<int>(items.size());
    Eigen::MatrixXd M(n * n + 1, K);
    for (int j = 0; j < K; ++j) {
      const Eigen::MatrixXd P = permutation_matrix(items[static_cast<std::size_t>(j)].perm);
      M.col(j).head(n * n) = Eigen::Map<const Eigen::VectorXd>(P.data(), n * n);
      M(n * n, j) = 1.0;
    }
    const Eigen::MatrixXd ker = Eigen::FullPivLU<Eigen::MatrixXd>(M).kernel();
    if (ker.cols() == 0 || ker.col(0).norm() == 0) break;
    Eigen::VectorXd z = ker.col(0);
    if (z.maxCoeff() <= 0) z = -z;
    double t = std::numeric_limits<double>::infinity();
    for (int j = 0; j < K; ++j)
      if (z[j] > 1e-14) t = std::min(t, items[static_cast<std::size_t>(j)].weight / z[j]);
    WeightedPermutationList kept;
    int dropped = -1;
    double smallest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < K; ++j) {
      const double w = items[static_cast<std::size_t>(j)].weight - t * z[j];
      if (w < smallest) {
        smallest = w;
        dropped = j;
      }
    }
    for (int j = 0; j < K; ++j) {
      if (j == dropped) continue;
      WeightedPermutation it = items[static_cast<std::size_t>(j)];
      it.weight -= t * z[j];
      if (it.weight > 0) kept.push_back(std::move(it));
    }
    items = std::move(kept);
  }
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Eigen::VectorXd permute(const Eigen::VectorXd& x, const std::vector<int>& perm) {
  Eigen::VectorXd y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) y[i] = x[perm[static_cast<std::size_t>(i)]];
  return y;
}

// Phase-one simplex for {lambda >= 0 : V lambda = b}. Returns the weights, or empty when infeasible.
std::vector<double> feasible_point(const Eigen::MatrixXd& V, const Eigen::VectorXd& b, double tol) {
  const int m = static_cast<int>(V.rows()), N = static_cast<int>(V.cols());
  const int cols = N + m + 1;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, cols);
  for (int i = 0; i < m; ++i) {
    const double sgn = b[i] < 0 ? -1.0 : 1.0;
    T.row(i).head(N) = sgn * V.row(i);
    T(i, N + i) = 1.0;
    T(i, cols - 1) = sgn * b[i];
  }
  for (int i = 0; i < m; ++i) T.row(m) -= T.row(i);
  for (int i = 0; i < m; ++i) T(m, N + i) = 0;
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::iota(basis.begin(), basis.end(), N);

  const int max_iter = 50 * (N + m);
  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    // Bland's rule: first column with negative reduced cost.
    for (int j = 0; j < N + m; ++j)
      if (T(m, j) < -1e-12) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > 1e-12) {
        const double ratio = T(i, cols - 1) / T(i, enter);
        if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw NumericError("hull check: unbounded phase-one problem");
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i <= m; ++i)
      if (i != leave && T(i, enter) != 0) T.row(i) -= T(i, enter) * T.row(leave);
    basis[static_cast<std::size_t>(leave)] = enter;
    if (iter == max_iter - 1) throw NumericError("hull check: simplex iteration limit reached");
  }
  if (-T(m, cols - 1) > tol) return {};
  std::vector<double> lambda(static_cast<std::size_t>(N), 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] < N) lambda[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = T(i, cols - 1);
  return lambda;
}

}  // namespace

DoublyStochasticMatrix::DoublyStochasticMatrix(const Eigen::MatrixXd& m) : m_(m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw ArgumentError("doubly stochastic: matrix must be square");
  if (!m.allFinite()) throw ArgumentError("doubly stochastic: non-finite entries");
  if (m.minCoeff() < -1e-12) throw ArgumentError("doubly stochastic: negative entry");
  m_ = m_.cwiseMax(0.0);
  const double row_err = (m_.rowwise().sum().array() - 1).abs().maxCoeff();
  const double col_err = (m_.colwise().sum().array() - 1).abs().maxCoeff();
  if (row_err > 1e-10 || col_err > 1e-10) throw ArgumentError("doubly stochastic: row or column sums differ from 1");
}

Eigen::MatrixXd permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) P(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return P;
}

Eigen::MatrixXd reconstruct(const WeightedPermutationList& items, int n) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (const auto& it : items) S += it.weight * permutation_matrix(it.perm);
  return S;
}

WeightedPermutationList bvn_decompose(const DoublyStochasticMatrix& S) {
  const int n = S.dim();
  Eigen::MatrixXd R = S.matrix();
  WeightedPermutationList items;
  std::vector<int> perm;
  for (int step = 0; step < n * n + 1; ++step) {
    if (R.sum() / n < 1e-11) break;
    if (!perfect_matching(R, perm)) throw DecompositionError("bvn: no perfect matching on the positive support");
    double w = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) w = std::min(w, R(i, perm[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i) {
      double& e = R(i, perm[static_cast<std::size_t>(i)]);
      e = e - w <= kSupportThreshold ? 0.0 : e - w;
    }
    items.push_back({w, perm});
  }
  if (R.sum() / n >= 1e-11) throw DecompositionError("bvn: decomposition did not exhaust the matrix");
  caratheodory_prune(items, n);
  const double total = std::accumulate(items.begin(), items.end(), 0.0,
                                       [](double acc, const WeightedPermutation& it) { return acc + it.weight; });
  for (auto& it : items) it.weight /= total;
  return items;
}

DoublyStochasticMatrix squared_orthogonal(const Eigen::MatrixXd& P) {
  if (P.rows() != P.cols()) throw ArgumentError("squared_orthogonal: matrix must be square");
  const double err = (P.transpose() * P - Eigen::MatrixXd::Identity(P.rows(), P.cols())).cwiseAbs().maxCoeff();
  if (!(err < 1e-10)) throw ArgumentError("squared_orthogonal: matrix is not orthogonal");
  return DoublyStochasticMatrix(P.cwiseProduct(P));
}

HullCheckResult midpoint_hull_check(const SymmetricMatrix& A, const SymmetricMatrix& B) {
  const int n = A.dim();
  if (B.dim() != n) throw ArgumentError("hull check: dimension mismatch");
  if (n < 1 || n > 6) throw ArgumentError("hull check: requires 1 <= n <= 6");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(A.matrix()), eb(B.matrix()),
      em(0.5 * (A.matrix() + B.matrix()));
  HullCheckResult res;
  res.u = ea.eigenvalues();
  res.v = eb.eigenvalues();
  res.w = em.eigenvalues();
  const double scale = std::max({1.0, res.u.cwiseAbs().maxCoeff(), res.v.cwiseAbs().maxCoeff()});

  const auto perms = all_permutations(n);
  const int P = static_cast<int>(perms.size());
  Eigen::MatrixXd V(n + 1, 2 * P);
  for (int j = 0; j < P; ++j) {
    V.col(j).head(n) = permute(res.u, perms[static_cast<std::size_t>(j)]) / scale;
    V.col(P + j).head(n) = permute(res.v, perms[static_cast<std::size_t>(j)]) / scale;
  }
  V.row(n).setOnes();
  Eigen::VectorXd b(n + 1);
  b.head(n) = res.w / scale;
  b[n] = 1.0;
  const std::vector<double> lambda = feasible_point(V, b, 1e-9);
  res.feasible = !lambda.empty();
  if (res.feasible) {
    Eigen::VectorXd rec = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < 2 * P; ++j) {
      const double wgt = lambda[static_cast<std::size_t>(j)];
      if (wgt <= 0) continue;
      const bool from_a = j < P;
      const auto& perm = perms[static_cast<std::size_t>(from_a ? j : j - P)];
      res.certificate.push_back({wgt, from_a ? 'A' : 'B', perm});
      rec += wgt * permute(from_a ? res.u : res.v, perm);
    }
    res.lp_residual = (rec - res.w).cwiseAbs().maxCoeff();
  }

  // Diagonal of W^T M W through the eigenvector overlaps with A and B.
  const Eigen::MatrixXd Qa = em.eigenvectors().transpose() * ea.eigenvectors();
  const Eigen::MatrixXd Qb = em.eigenvectors().transpose() * eb.eigenvectors();
  Eigen::VectorXd rec = Eigen::VectorXd::Zero(n);
  for (const auto& [Q, src, x] : {std::tuple{Qa, 'A', res.u}, std::tuple{Qb, 'B', res.v}}) {
    for (const auto& it : bvn_decompose(squared_orthogonal(Q))) {
      res.constructive.push_back({0.5 * it.weight, src, it.perm});
      rec += 0.5 * it.weight * permute(x, it.perm);
    }
  }
  res.constructive_residual = (rec - res.w).cwiseAbs().maxCoeff();
  return res;
}

}  // namespace sigmagreen
