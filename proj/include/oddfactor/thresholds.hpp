#pragma once

#include "oddfactor/graph.hpp"
#include "oddfactor/spectral.hpp"

namespace oddfactor {

/// Parity of r, then parity of ceil(r/b).
enum class ParityCase { EvenEven, EvenOdd, OddOdd, OddEven };

const char* to_string(ParityCase c);

/// Derived quantities for an (r, b) pair.
///
///   ceil_rb = ceil(r / b)
///   epsilon = 2 if r and ceil_rb share parity, otherwise 1
///   eta     = ceil_rb - epsilon  (number of degree r-1 vertices in H)
///   x       = 1 for odd r, 0 for even r
///   rho     = (r - 2 - x + sqrt((r + 2 + x)^2 - 4 eta)) / 2
struct ThresholdParams {
  int r = 0;
  int b = 0;
  int ceil_rb = 0;
  int epsilon = 0;
  int eta = 0;
  int x = 0;
  ParityCase parity_case = ParityCase::EvenEven;
  double rho = 0.0;
};

/// Requires r >= 3 and b odd with 1 <= b < r; throws InvalidArgument otherwise.
ThresholdParams threshold_params(int r, int b);

/// Spectral threshold on lambda_3 guaranteeing an odd [1,b]-factor.
/// Evaluates the four parity branches and the unified (x, eta) form and
/// throws Internal if they disagree by more than 1e-12.
double rho_threshold(const ThresholdParams& p);

/// The four-branch form alone, keyed on (r, ceil_rb).
double rho_by_parity_case(int r, int ceil_rb);
/// The unified form alone.
double rho_unified(int r, int eta);

/// Earlier lambda_3 bound of Lu, Wu and Yang for odd [1,b]-factors.
double lwy_threshold(int r, int b);

/// Earlier lambda_3 bounds for perfect matchings (b = 1).
struct OneFactorBounds {
  double bh = 0.0;   // Brouwer-Haemers
  double cgh = 0.0;  // Cioaba-Gregory-Haemers
};

OneFactorBounds prior_1factor_thresholds(int r);

/// Largest root of x^3 - x^2 - 6x + 2, by bisection to 1e-12.
double cgh_cubic_root();

/// Odd r with eta < 3 has no simple-graph realization of the extremal
/// component (the construction needs the complement of C_eta).
bool extremal_is_degenerate(const ThresholdParams& p);

/// The extremal component H_{r,eta}:
///   r even: K_{r+1-eta} join (K_eta minus a perfect matching)
///   r odd:  complement(C_eta) join (K_{r+2-eta} minus a perfect matching)
/// Throws DegenerateConstruction when extremal_is_degenerate(p); throws
/// Internal if the result violates the expected order, size or degree profile.
Graph build_extremal(const ThresholdParams& p);

/// The two join factors of build_extremal(p) as blocks, in construction
/// order. When eta = 0 the second factor is empty and a single block is
/// returned.
VertexPartition extremal_partition(const ThresholdParams& p);

}  // namespace oddfactor
