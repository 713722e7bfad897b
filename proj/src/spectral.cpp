#include "oddfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "oddfactor/error.hpp"

namespace oddfactor {

SymMatrix::SymMatrix(int order)
    : s_(order), a_(static_cast<std::size_t>(order) * std::max(order, 0), 0.0) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix order");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.s_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.s_)
      throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
    for (int j = i; j < m.s_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  a_[static_cast<std::size_t>(i) * s_ + j] = value;
  a_[static_cast<std::size_t>(j) * s_ + i] = value;
}

VertexPartition::VertexPartition(int n, std::vector<VertexSet> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  std::vector<bool> seen(owner_.size(), false);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error(ErrorKind::InvalidPartition, "partition has an empty block");
    for (Vertex v : blocks_[b]) {
      if (v >= n) throw Error(ErrorKind::InvalidPartition, "partition block vertex out of range");
      if (seen[v]) throw Error(ErrorKind::InvalidPartition, "partition blocks overlap");
      seen[v] = true;
      owner_[v] = b;
      ++covered;
    }
  }
  if (covered != owner_.size())
    throw Error(ErrorKind::InvalidPartition, "partition does not cover every vertex");
}

QuotientMatrix::QuotientMatrix(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != rows_.size())
      throw Error(ErrorKind::InvalidArgument, "quotient matrix must be square");
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (const auto& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

Spectrum eigenvalues_sym(const SymMatrix& m, double tol) {
  const int s = m.order();
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "eigenvalues of an empty matrix");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");

  std::vector<double> a(static_cast<std::size_t>(s) * s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      double x = m(i, j);
      if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "matrix has a non-finite entry");
      a[static_cast<std::size_t>(i) * s + j] = x;
    }
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * s + j]; };

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (int i = 0; i < s; ++i) {
      diag += at(i, i) * at(i, i);
      for (int j = i + 1; j < s; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) < tol * (1.0 + std::sqrt(diag))) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;

    for (int p = 0; p < s - 1; ++p) {
      for (int q = p + 1; q < s; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const double tau = sn / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < s; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = arp - sn * (arq + arp * tau);
          const double new_rq = arq + sn * (arp - arq * tau);
          at(r, p) = at(p, r) = new_rp;
          at(r, q) = at(q, r) = new_rq;
        }
      }
    }
  }
  if (!converged)
    throw Error(ErrorKind::NoConvergence, "Jacobi iteration did not converge");

  Spectrum out;
  out.tol = tol;
  out.values.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Spectrum adjacency_spectrum(const Graph& g, double tol) {
  return eigenvalues_sym(adjacency_matrix(g), tol);
}

double lambda_k(const Graph& g, int k) {
  if (k < 1 || k > g.order())
    throw Error(ErrorKind::InvalidArgument, "eigenvalue index " + std::to_string(k) +
                                                " out of range for n=" +
                                                std::to_string(g.order()));
  return adjacency_spectrum(g).lambda(static_cast<std::size_t>(k));
}

namespace {

void require_partition_of(const Graph& g, const VertexPartition& p) {
  if (p.order() != g.order())
    throw Error(ErrorKind::InvalidPartition, "partition order does not match the graph");
}

// counts[v][j] = neighbors of v inside block j
std::vector<std::vector<int>> block_neighbor_counts(const Graph& g, const VertexPartition& p) {
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(g.order()),
                                       std::vector<int>(p.block_count(), 0));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) ++counts[v][p.block_of(w)];
  return counts;
}

}  // namespace

QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& p) {
  require_partition_of(g, p);
  const auto counts = block_neighbor_counts(g, p);
  const std::size_t s = p.block_count();
  std::vector<std::vector<double>> q(s, std::vector<double>(s, 0.0));
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<long> totals(s, 0);
    for (Vertex v : p.block(i))
      for (std::size_t j = 0; j < s; ++j) totals[j] += counts[v][j];
    for (std::size_t j = 0; j < s; ++j)
      q[i][j] = static_cast<double>(totals[j]) / static_cast<double>(p.block(i).size());
  }
  return QuotientMatrix(std::move(q));
}

bool is_equitable(const Graph& g, const VertexPartition& p) {
  require_partition_of(g, p);
  const auto counts = block_neighbor_counts(g, p);
  for (const auto& block : p.blocks()) {
    const auto& first = counts[block[0]];
    for (Vertex v : block)
      if (counts[v] != first) return false;
  }
  return true;
}

std::pair<double, double> quotient_eigs_2x2(const QuotientMatrix& q) {
  if (q.order() != 2)
    throw Error(ErrorKind::InvalidArgument,
                "quotient_eigs_2x2 needs a 2x2 matrix, got order " + std::to_string(q.order()));
  const double a = q(0, 0), b = q(0, 1), c = q(1, 0), d = q(1, 1);
  const double trace = a + d;
  const double det = a * d - b * c;
  const double disc = (a - d) * (a - d) + 4.0 * b * c;
  if (disc < 0.0) throw Error(ErrorKind::InvalidArgument, "2x2 matrix has complex eigenvalues");
  const double root = std::sqrt(disc);
  // Avoid cancellation: compute the root of larger magnitude directly.
  if (trace >= 0.0) {
    const double hi = 0.5 * (trace + root);
    const double lo = hi != 0.0 ? det / hi : 0.5 * (trace - root);
    return {hi, lo};
  }
  const double lo = 0.5 * (trace - root);
  const double hi = lo != 0.0 ? det / lo : 0.5 * (trace + root);
  return {hi, lo};
}

}  // namespace oddfactor
