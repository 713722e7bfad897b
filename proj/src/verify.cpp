#include "oddfactor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "oddfactor/error.hpp"
#include "oddfactor/spectral.hpp"

namespace oddfactor {

namespace {

// True when some pair of free points can still be joined.
bool has_valid_pair(const std::vector<Vertex>& free_points,
                    const std::vector<std::vector<bool>>& adj) {
  for (std::size_t i = 0; i < free_points.size(); ++i)
    for (std::size_t j = i + 1; j < free_points.size(); ++j) {
      const Vertex u = free_points[i], v = free_points[j];
      if (u != v && !adj[u][v]) return true;
    }
  return false;
}

}  // namespace

Graph random_regular(int n, int r, std::uint64_t seed, int max_restarts) {
  if (n < 1 || r < 0) throw Error(ErrorKind::InvalidArgument, "random_regular needs n >= 1, r >= 0");
  if ((static_cast<long>(n) * r) % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "n*r must be even (n=" + std::to_string(n) +
                                                ", r=" + std::to_string(r) + ")");
  if (r >= n)
    throw Error(ErrorKind::InvalidArgument, "r must be less than n (n=" + std::to_string(n) +
                                                ", r=" + std::to_string(r) + ")");
  std::mt19937_64 rng(seed);
  const auto un = static_cast<std::size_t>(n);

  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<Vertex> free_points;
    free_points.reserve(un * r);
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) free_points.push_back(v);
    std::vector<std::vector<bool>> adj(un, std::vector<bool>(un, false));
    std::vector<Edge> edges;

    bool stuck = false;
    int misses = 0;
    while (!free_points.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, free_points.size() - 1);
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      const Vertex u = free_points[i], v = free_points[j];
      if (i == j || u == v || adj[u][v]) {
        if (++misses >= 64) {
          if (!has_valid_pair(free_points, adj)) {
            stuck = true;
            break;
          }
          misses = 0;
        }
        continue;
      }
      misses = 0;
      adj[u][v] = adj[v][u] = true;
      edges.push_back({u, v});
      if (i < j) std::swap(i, j);
      free_points[i] = free_points.back();
      free_points.pop_back();
      free_points[j] = free_points.back();
      free_points.pop_back();
    }
    if (!stuck) return Graph(n, std::move(edges));
  }
  throw Error(ErrorKind::RetryExhausted, "random_regular gave up after " +
                                             std::to_string(max_restarts) + " restarts (n=" +
                                             std::to_string(n) + ", r=" + std::to_string(r) + ")");
}

TrialReport theorem_check(const Graph& g, int b, FinderOptions finder) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.order();
  if (n == 0 || n % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "theorem check needs an even, positive vertex count");
  const int r = g.degree(0);
  if (!is_regular(g, r)) throw Error(ErrorKind::InvalidArgument, "theorem check needs a regular graph");
  const auto params = threshold_params(r, b);

  TrialReport report;
  report.r = r;
  report.b = b;
  report.n = n;
  report.lambda3 = lambda_k(g, 3);
  report.rho = params.rho;
  report.implication_applicable = report.lambda3 < params.rho - kTheoremTol;
  if (report.implication_applicable) {
    report.certificate = find_odd_factor(g, b, finder);
    report.factor_found = report.certificate.has_value();
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SharpnessResult sharpness_check(int r, int b) {
  SharpnessResult out;
  out.params = threshold_params(r, b);
  const auto& p = out.params;
  if (extremal_is_degenerate(p)) {
    out.degenerate = true;
    return out;
  }
  const Graph h = build_extremal(p);
  const auto partition = extremal_partition(p);

  out.order = h.order();
  out.twice_edges = static_cast<int>(2 * h.size());
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) == r - 1) ++out.low_degree_vertices;
  out.structure_ok = out.order == r + 1 + p.x && out.twice_edges == r * (r + 1 + p.x) - p.eta &&
                     out.low_degree_vertices == p.eta;
  out.lambda1 = lambda_k(h, 1);
  out.equitable = is_equitable(h, partition);

  bool quotient_ok = true;
  if (partition.block_count() == 2) {
    out.quotient_lambda1 = quotient_eigs_2x2(quotient_matrix(h, partition)).first;
    quotient_ok = std::abs(*out.quotient_lambda1 - p.rho) < kTheoremTol;
  }
  out.pass = out.structure_ok && std::abs(out.lambda1 - p.rho) < kTheoremTol && quotient_ok;
  return out;
}

Case2Result case2_polynomial_check(int r, int b) {
  if (r % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "the Case-2 polynomial applies to odd r only");
  Case2Result out;
  out.params = threshold_params(r, b);
  const int eta = out.params.eta;
  const double rho = out.params.rho;
  const int big = r + 2 - eta;  // |V_1|
  if (eta < 1) throw Error(ErrorKind::Internal, "odd r produced eta < 1");

  out.pass = true;
  for (int t = 0; t <= big; ++t) {
    Case2Point pt;
    pt.t = t;
    pt.m12 = big * eta - t;
    const double m = pt.m12;
    const QuotientMatrix q({{r - m / big, m / big}, {m / eta, r - 1 - m / eta}});
    pt.direct = (rho - q(0, 0)) * (rho - q(1, 1)) - q(0, 1) * q(1, 0);
    pt.factored = -static_cast<double>(t) * (r + 2) / (static_cast<double>(big) * eta) *
                  (rho + static_cast<double>(eta) / (r + 2) - r);
    if (pt.direct > kTheoremTol || std::abs(pt.direct - pt.factored) > kTheoremTol)
      out.pass = false;
    out.points.push_back(pt);
  }
  return out;
}

std::vector<int> b_values(int r, BPolicy policy) {
  if (policy == BPolicy::OnlyOne) return r > 1 ? std::vector<int>{1} : std::vector<int>{};
  std::vector<int> out;
  for (int b = 1; b < r; b += 2) out.push_back(b);
  return out;
}

std::vector<SweepRow> bound_sweep(int r_max, BPolicy policy) {
  if (r_max < 3) throw Error(ErrorKind::InvalidArgument, "sweep needs r_max >= 3");
  std::vector<SweepRow> rows;
  for (int r = 3; r <= r_max; ++r) {
    for (int b : b_values(r, policy)) {
      const auto p = threshold_params(r, b);
      SweepRow row;
      row.r = r;
      row.b = b;
      row.ceil_rb = p.ceil_rb;
      row.epsilon = p.epsilon;
      row.eta = p.eta;
      row.rho = p.rho;
      row.lwy = lwy_threshold(r, b);
      row.rho_ge_lwy = row.rho >= row.lwy;
      if (b == 1) {
        const auto prior = prior_1factor_thresholds(r);
        row.cgh = prior.cgh;
        row.bh = prior.bh;
      }
      if (!extremal_is_degenerate(p)) {
        row.lambda1_H = lambda_k(build_extremal(p), 1);
        if (std::abs(*row.lambda1_H - row.rho) >= kTheoremTol)
          throw Error(ErrorKind::Internal, "lambda_1(H) differs from rho at r=" +
                                               std::to_string(r) + ", b=" + std::to_string(b));
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision);
  out << kSweepCsvHeader << '\n';
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  for (const auto& row : rows) {
    out << row.r << ',' << row.b << ',' << row.ceil_rb << ',' << row.epsilon << ',' << row.eta
        << ',' << row.rho << ',' << row.lwy << ',';
    opt(row.cgh);
    out << ',';
    opt(row.bh);
    out << ',';
    opt(row.lambda1_H);
    out << '\n';
  }
  return out.str();
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  // splitmix64 over a per-trial offset
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void require_campaign(const CampaignConfig& c) {
  if (c.trials < 0) throw Error(ErrorKind::InvalidArgument, "trials must be non-negative");
  if (c.jobs < 1) throw Error(ErrorKind::InvalidArgument, "jobs must be positive");
  const int n_lo = c.n_min + (c.n_min % 2);
  if (n_lo > c.n_max) throw Error(ErrorKind::InvalidArgument, "n range contains no even value");
  if (c.r_min < 3 || c.r_min > c.r_max)
    throw Error(ErrorKind::InvalidArgument, "r range must satisfy 3 <= r_min <= r_max");
  if (c.r_min >= n_lo)
    throw Error(ErrorKind::InvalidArgument, "r_min must be below the smallest even n");
}

struct TrialOutcome {
  TrialReport report;
  std::string edge_list;
};

TrialOutcome run_trial(const CampaignConfig& c, int index) {
  std::mt19937_64 rng(trial_seed(c.master_seed, static_cast<std::uint64_t>(index)));
  const int n_lo = (c.n_min + (c.n_min % 2)) / 2;
  const int n_hi = c.n_max / 2;
  const int n = 2 * std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  const int r = std::uniform_int_distribution<int>(c.r_min, std::min(c.r_max, n - 1))(rng);
  const auto bs = b_values(r, c.b_policy);
  const int b = bs[std::uniform_int_distribution<std::size_t>(0, bs.size() - 1)(rng)];
  const std::uint64_t graph_seed = rng();

  const Graph g = random_regular(n, r, graph_seed);
  TrialOutcome out;
  out.report = theorem_check(g, b, c.finder);
  out.report.seed = graph_seed;
  if (out.report.implication_applicable && !out.report.factor_found)
    out.edge_list = serialize_edge_list(g);
  return out;
}

}  // namespace

CampaignSummary randomized_theorem_campaign(const CampaignConfig& config) {
  require_campaign(config);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int i = next++; i < config.trials && !failed; i = next++) {
      try {
        outcomes[i] = run_trial(config, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int workers = std::min(config.jobs, std::max(config.trials, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignSummary summary;
  summary.trials = config.trials;
  for (int i = 0; i < config.trials; ++i) {
    auto& o = outcomes[i];
    if (o.report.implication_applicable) {
      ++summary.applicable;
      if (o.report.factor_found) ++summary.found;
      else summary.counterexamples.push_back({i, o.report, o.edge_list});
    } else {
      ++summary.inapplicable;
    }
    summary.reports.push_back(std::move(o.report));
  }
  return summary;
}

}  // namespace oddfactor
