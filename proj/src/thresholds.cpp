#include "oddfactor/thresholds.hpp"

#include <cmath>
#include <string>

#include "oddfactor/error.hpp"

namespace oddfactor {

const char* to_string(ParityCase c) {
  switch (c) {
    case ParityCase::EvenEven: return "even-even";
    case ParityCase::EvenOdd: return "even-odd";
    case ParityCase::OddOdd: return "odd-odd";
    case ParityCase::OddEven: return "odd-even";
  }
  return "unknown";
}

namespace {

void require_r_b(int r, int b) {
  if (r < 3) throw Error(ErrorKind::InvalidArgument, "r must be at least 3, got " + std::to_string(r));
  if (b < 1 || b % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "b must be a positive odd integer, got " + std::to_string(b));
  if (b >= r)
    throw Error(ErrorKind::InvalidArgument,
                "b must be less than r (got r=" + std::to_string(r) + ", b=" + std::to_string(b) + ")");
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

ThresholdParams threshold_params(int r, int b) {
  require_r_b(r, b);
  ThresholdParams p;
  p.r = r;
  p.b = b;
  p.ceil_rb = ceil_div(r, b);
  p.epsilon = (r % 2 == p.ceil_rb % 2) ? 2 : 1;
  p.eta = p.ceil_rb - p.epsilon;
  p.x = r % 2;
  const bool r_even = r % 2 == 0;
  const bool c_even = p.ceil_rb % 2 == 0;
  p.parity_case = r_even ? (c_even ? ParityCase::EvenEven : ParityCase::EvenOdd)
                         : (c_even ? ParityCase::OddEven : ParityCase::OddOdd);
  if (p.eta < 0 || p.eta % 2 != p.x)
    throw Error(ErrorKind::Internal, "eta has the wrong parity for r=" + std::to_string(r));
  p.rho = rho_threshold(p);
  return p;
}

double rho_by_parity_case(int r, int ceil_rb) {
  const double rd = r;
  const double c = ceil_rb;
  auto branch = [&](double shift, double offset) {
    const double disc = (rd + shift) * (rd + shift) - 4.0 * (c - offset);
    if (disc < 0.0) throw Error(ErrorKind::Internal, "negative discriminant in rho");
    return (rd - shift + std::sqrt(disc)) / 2.0;
  };
  const bool r_even = r % 2 == 0;
  const bool c_even = ceil_rb % 2 == 0;
  if (r_even) return c_even ? branch(2.0, 2.0) : branch(2.0, 1.0);
  return c_even ? branch(3.0, 1.0) : branch(3.0, 2.0);
}

double rho_unified(int r, int eta) {
  const double x = r % 2;
  const double shift = r + 2 + x;
  const double disc = shift * shift - 4.0 * eta;
  if (disc < 0.0) throw Error(ErrorKind::Internal, "negative discriminant in rho");
  return (r - 2 - x + std::sqrt(disc)) / 2.0;
}

double rho_threshold(const ThresholdParams& p) {
  const double branched = rho_by_parity_case(p.r, p.ceil_rb);
  const double unified = rho_unified(p.r, p.eta);
  if (std::abs(branched - unified) > 1e-12)
    throw Error(ErrorKind::Internal, "rho forms disagree for r=" + std::to_string(p.r) +
                                         ", b=" + std::to_string(p.b));
  return branched;
}

double lwy_threshold(int r, int b) {
  require_r_b(r, b);
  const int c = ceil_div(r, b);
  const double rd = r;
  const bool c_even = c % 2 == 0;
  if (r % 2 == 0) {
    const double tail = 1.0 / ((rd + 1.0) * (rd + 2.0));
    return rd - (c_even ? c - 2 : c - 1) / (rd + 1.0) + tail;
  }
  const double tail = 1.0 / ((rd + 2.0) * (rd + 2.0));
  return rd - (c_even ? c - 1 : c - 2) / (rd + 1.0) + tail;
}

double cgh_cubic_root() {
  auto f = [](double x) { return ((x - 1.0) * x - 6.0) * x + 2.0; };
  // f(2) = -6 < 0 < 2 = f(3), and the other two roots lie below 1.
  double lo = 2.0, hi = 3.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OneFactorBounds prior_1factor_thresholds(int r) {
  if (r < 3) throw Error(ErrorKind::InvalidArgument, "r must be at least 3, got " + std::to_string(r));
  const double rd = r;
  OneFactorBounds out;
  if (r % 2 == 0) {
    out.bh = rd - 1.0 + 3.0 / (rd + 1.0);
    out.cgh = 0.5 * (rd - 2.0 + std::sqrt(rd * rd + 12.0));
  } else {
    out.bh = rd - 1.0 + 3.0 / (rd + 2.0);
    out.cgh = r == 3 ? cgh_cubic_root()
                     : 0.5 * (rd - 3.0 + std::sqrt((rd + 1.0) * (rd + 1.0) + 16.0));
  }
  return out;
}

bool extremal_is_degenerate(const ThresholdParams& p) {
  return p.r % 2 == 1 && p.eta < 3;
}

namespace {

// Sizes of the two join factors.
std::pair<int, int> factor_sizes(const ThresholdParams& p) {
  if (p.r % 2 == 0) return {p.r + 1 - p.eta, p.eta};
  return {p.eta, p.r + 2 - p.eta};
}

void require_buildable(const ThresholdParams& p) {
  if (extremal_is_degenerate(p))
    throw Error(ErrorKind::DegenerateConstruction,
                "no extremal component for odd r=" + std::to_string(p.r) + " with eta=" +
                    std::to_string(p.eta) + " (complement of C_eta needs eta >= 3)");
}

}  // namespace

Graph build_extremal(const ThresholdParams& p) {
  require_buildable(p);
  const auto [first, second] = factor_sizes(p);
  Graph h = p.r % 2 == 0 ? join(complete(first), matching_complement(second))
                         : join(complement(cycle(first)), matching_complement(second));

  const int expected_order = p.r + 1 + p.x;
  const auto expected_twice_edges = static_cast<std::size_t>(p.r * expected_order - p.eta);
  int low_degree = 0;
  bool degrees_ok = true;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == p.r - 1) ++low_degree;
    else if (h.degree(v) != p.r) degrees_ok = false;
  }
  if (h.order() != expected_order || 2 * h.size() != expected_twice_edges || !degrees_ok ||
      low_degree != p.eta)
    throw Error(ErrorKind::Internal, "extremal component has the wrong structure for r=" +
                                         std::to_string(p.r) + ", b=" + std::to_string(p.b));
  return h;
}

VertexPartition extremal_partition(const ThresholdParams& p) {
  require_buildable(p);
  const auto [first, second] = factor_sizes(p);
  if (second == 0) return VertexPartition(first, {VertexSet::range(0, first)});
  return VertexPartition(first + second,
                         {VertexSet::range(0, first), VertexSet::range(first, first + second)});
}

}  // namespace oddfactor
