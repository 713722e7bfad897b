#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddfactor/factor.hpp"
#include "oddfactor/graph.hpp"
#include "oddfactor/thresholds.hpp"

namespace oddfactor {

/// Guard band for every theorem-level comparison.
inline constexpr double kTheoremTol = 1e-9;

inline constexpr int kDefaultRegularRestarts = 10'000;

/// Simple r-regular graph on n vertices from the pairing model. Pairs that
/// would create a loop or a repeated edge are redrawn, and the whole pairing
/// restarts when no valid pair is left. Deterministic for a fixed seed.
/// Throws InvalidArgument when n*r is odd or r >= n, RetryExhausted after
/// max_restarts failed pairings.
Graph random_regular(int n, int r, std::uint64_t seed, int max_restarts = kDefaultRegularRestarts);

struct TrialReport {
  int r = 0;
  int b = 0;
  int n = 0;
  std::uint64_t seed = 0;
  double lambda3 = 0.0;
  double rho = 0.0;
  /// lambda3 < rho - kTheoremTol, i.e. the theorem promises a factor.
  bool implication_applicable = false;
  bool factor_found = false;
  double elapsed_seconds = 0.0;
  std::optional<FactorCertificate> certificate;
};

/// Checks the lambda_3 implication on one graph. The factor search only runs
/// when the implication applies. Throws InvalidArgument unless g is r-regular
/// with r >= 3, n is even, and b is odd with b < r.
TrialReport theorem_check(const Graph& g, int b, FinderOptions finder = {});

struct SharpnessResult {
  ThresholdParams params;
  bool degenerate = false;
  double lambda1 = 0.0;
  int order = 0;
  int twice_edges = 0;
  int low_degree_vertices = 0;
  bool structure_ok = false;
  bool equitable = false;
  /// Larger quotient eigenvalue of the defining partition (absent for a
  /// single-block partition).
  std::optional<double> quotient_lambda1;
  bool pass = false;
};

/// Builds H_{r,eta} and compares lambda_1 with rho(r,b). For degenerate
/// parameters returns degenerate = true, pass = false, with params.rho set.
SharpnessResult sharpness_check(int r, int b);

struct Case2Point {
  int t = 0;
  int m12 = 0;
  double direct = 0.0;    // characteristic polynomial of the quotient matrix at rho
  double factored = 0.0;  // -t(r+2)/((r+2-eta)eta) * (rho + eta/(r+2) - r)
};

struct Case2Result {
  ThresholdParams params;
  std::vector<Case2Point> points;
  bool pass = false;
};

/// For every t in [0, r+2-eta] with m12 = (r+2-eta)eta - t, checks
/// q(rho) <= kTheoremTol and |direct - factored| <= kTheoremTol.
/// Throws InvalidArgument for even r.
Case2Result case2_polynomial_check(int r, int b);

enum class BPolicy { AllOdd, OnlyOne };

/// Odd b values below r allowed by the policy.
std::vector<int> b_values(int r, BPolicy policy);

struct SweepRow {
  int r = 0;
  int b = 0;
  int ceil_rb = 0;
  int epsilon = 0;
  int eta = 0;
  double rho = 0.0;
  double lwy = 0.0;
  std::optional<double> cgh;  // b = 1 rows only
  std::optional<double> bh;   // b = 1 rows only
  std::optional<double> lambda1_H;
  bool rho_ge_lwy = false;
};

/// One row per (r, b) with 3 <= r <= r_max. Throws Internal if a
/// constructed H_{r,eta} misses rho by kTheoremTol or more.
std::vector<SweepRow> bound_sweep(int r_max, BPolicy policy);

inline constexpr const char* kSweepCsvHeader = "r,b,ceil_rb,epsilon,eta,rho,lwy,cgh,bh,lambda1_H";

std::string sweep_csv(const std::vector<SweepRow>& rows, int precision = 9);

struct CampaignConfig {
  int trials = 0;
  int n_min = 8;
  int n_max = 20;
  int r_min = 3;
  int r_max = 7;
  BPolicy b_policy = BPolicy::AllOdd;
  std::uint64_t master_seed = 1;
  int jobs = 1;
  FinderOptions finder{256};
};

struct Counterexample {
  int trial = 0;
  TrialReport report;
  std::string edge_list;
};

struct CampaignSummary {
  int trials = 0;
  int applicable = 0;
  int found = 0;
  int inapplicable = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<TrialReport> reports;  // indexed by trial
};

/// Seed for trial `index`, derived from the master seed alone.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// Runs theorem_check over randomly drawn (n, r, b, graph). Only even n are
/// drawn. Results are merged by trial index, so the summary does not depend
/// on `jobs`.
CampaignSummary randomized_theorem_campaign(const CampaignConfig& config);

}  // namespace oddfactor
