#pragma once

#include "sigmagreen/errors.hpp"
#include "sigmagreen/types.hpp"

#include <vector>

namespace sigmagreen {

/// Non-negative square matrix whose rows and columns sum to one.
/// Entries in [-1e-12, 0) are clamped to zero.
class DoublyStochasticMatrix {
 public:
  explicit DoublyStochasticMatrix(const Eigen::MatrixXd& m);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Permutations are 0-based: perm[i] is the column of the unit entry in row i.
struct WeightedPermutation {
  double weight = 0;
  std::vector<int> perm;
};

using WeightedPermutationList = std::vector<WeightedPermutation>;

Eigen::MatrixXd permutation_matrix(const std::vector<int>& perm);
Eigen::MatrixXd reconstruct(const WeightedPermutationList& items, int n);

// Greedy Birkhoff-von Neumann decomposition followed by Caratheodory pruning to at most n^2 - 2n + 2 items.
WeightedPermutationList bvn_decompose(const DoublyStochasticMatrix& S);

// S_ij = P_ij^2 for orthogonal P.
DoublyStochasticMatrix squared_orthogonal(const Eigen::MatrixXd& P);

struct HullVertexWeight {
  double weight = 0;
  char source = 'A';  // 'A': permutation of u, 'B': permutation of v
  std::vector<int> perm;
};

struct HullCheckResult {
  bool feasible = false;
  Eigen::VectorXd u, v, w;  // ascending eigenvalues of A, B, (A+B)/2
  // Simplex certificate over the 2 n! permuted vertices.
  std::vector<HullVertexWeight> certificate;
  double lp_residual = 0;
  // Constructive certificate w = 1/2 S1 u + 1/2 S2 v with S1, S2 from eigenvector overlaps.
  std::vector<HullVertexWeight> constructive;
  double constructive_residual = 0;
};

// Whether the eigenvalues of (A+B)/2 lie in the convex hull of permutations of those of A and of B. n <= 6.
HullCheckResult midpoint_hull_check(const SymmetricMatrix& A, const SymmetricMatrix& B);

}  // namespace sigmagreen
