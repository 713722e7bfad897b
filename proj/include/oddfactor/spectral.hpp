#pragma once

#include <utility>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

inline constexpr double kDefaultEigenTol = 1e-12;

/// Dense real symmetric matrix. Writes go to both (i,j) and (j,i), so the
/// stored entries are always exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(int order = 0);
  /// Mirrors the upper triangle of `rows` onto the lower one.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return s_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * s_ + j]; }
  void set(int i, int j, double value);

 private:
  int s_ = 0;
  std::vector<double> a_;
};

/// Eigenvalues in nonincreasing order together with the solver tolerance.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultEigenTol;

  std::size_t size() const { return values.size(); }
  /// 1-based, matching the lambda_1 >= lambda_2 >= ... convention.
  double lambda(std::size_t k) const { return values.at(k - 1); }
};

/// Disjoint nonempty blocks covering 0..n-1.
class VertexPartition {
 public:
  /// Throws InvalidPartition unless the blocks partition [0, n).
  VertexPartition(int n, std::vector<VertexSet> blocks);

  int order() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const VertexSet& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  /// Index of the block containing v.
  std::size_t block_of(Vertex v) const { return owner_[v]; }

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
  std::vector<std::size_t> owner_;
};

/// Square (not necessarily symmetric) matrix of block-average neighbor counts.
class QuotientMatrix {
 public:
  explicit QuotientMatrix(std::vector<std::vector<double>> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  double operator()(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// Cyclic Jacobi diagonalization. Converges once the off-diagonal Frobenius
/// norm drops below tol * (1 + diagonal norm). Throws NonFinite on NaN/inf
/// entries and InvalidArgument on an empty matrix or non-positive tol.
Spectrum eigenvalues_sym(const SymMatrix& m, double tol = kDefaultEigenTol);

Spectrum adjacency_spectrum(const Graph& g, double tol = kDefaultEigenTol);

/// k-th largest adjacency eigenvalue, 1 <= k <= n.
double lambda_k(const Graph& g, int k);

QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& p);

/// True iff every vertex of block i has the same number of neighbors in
/// block j, for all i and j.
bool is_equitable(const Graph& g, const VertexPartition& p);

/// Both roots of the characteristic polynomial of a 2x2 matrix, larger first.
/// Throws InvalidArgument for other orders or complex roots.
std::pair<double, double> quotient_eigs_2x2(const QuotientMatrix& q);

}  // namespace oddfactor
