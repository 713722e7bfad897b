#include <doctest.h>

#include <cmath>

#include "oddfactor/error.hpp"
#include "oddfactor/spectral.hpp"
#include "oddfactor/thresholds.hpp"

using namespace oddfactor;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("threshold parameters") {
  auto p = threshold_params(4, 1);
  CHECK(p.ceil_rb == 4);
  CHECK(p.epsilon == 2);
  CHECK(p.eta == 2);
  CHECK(p.x == 0);
  CHECK(p.parity_case == ParityCase::EvenEven);

  p = threshold_params(5, 1);
  CHECK(p.ceil_rb == 5);
  CHECK(p.epsilon == 2);
  CHECK(p.eta == 3);
  CHECK(p.parity_case == ParityCase::OddOdd);

  p = threshold_params(11, 3);
  CHECK(p.ceil_rb == 4);
  CHECK(p.epsilon == 1);
  CHECK(p.eta == 3);
  CHECK(p.parity_case == ParityCase::OddEven);

  p = threshold_params(6, 1);
  CHECK(p.parity_case == ParityCase::EvenEven);
  p = threshold_params(10, 3);  // ceil = 4
  CHECK(p.parity_case == ParityCase::EvenEven);
  p = threshold_params(8, 3);  // ceil = 3
  CHECK(p.parity_case == ParityCase::EvenOdd);
  CHECK(p.epsilon == 1);
  CHECK(p.eta == 2);

  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { threshold_params(5, 2); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { threshold_params(5, 5); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { threshold_params(5, 7); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { threshold_params(2, 1); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [] { threshold_params(5, -1); }));
}

TEST_CASE("parameter invariants over the sweep") {
  for (int r = 3; r <= 60; ++r)
    for (int b = 1; b < r; b += 2) {
      const auto p = threshold_params(r, b);
      REQUIRE(p.ceil_rb == (r + b - 1) / b);
      REQUIRE(p.epsilon == ((r - p.ceil_rb) % 2 == 0 ? 2 : 1));
      REQUIRE(p.eta == p.ceil_rb - p.epsilon);
      REQUIRE(p.eta % 2 == r % 2);
      REQUIRE(std::abs(rho_by_parity_case(r, p.ceil_rb) - rho_unified(r, p.eta)) < 1e-12);
      REQUIRE(p.rho == rho_threshold(p));
    }
}

TEST_CASE("rho spot values") {
  CHECK(std::abs(threshold_params(3, 1).rho - 2.0 * std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(threshold_params(4, 1).rho - (1.0 + std::sqrt(7.0))) < 1e-12);
  CHECK(std::abs(threshold_params(5, 1).rho - (1.0 + std::sqrt(13.0))) < 1e-12);
  // ceil(r/b) = 2 with r even forces eta = 0 and rho = r.
  for (int r = 4; r <= 20; r += 2) {
    const auto p = threshold_params(r, r - 1);
    CHECK(p.eta == 0);
    CHECK(p.rho == doctest::Approx(r).epsilon(1e-15));
  }
}

TEST_CASE("b = 1 coincides with the perfect-matching bound") {
  for (int r = 4; r <= 60; ++r)
    REQUIRE(std::abs(threshold_params(r, 1).rho - prior_1factor_thresholds(r).cgh) < 1e-9);
}

TEST_CASE("Lu-Wu-Yang threshold") {
  CHECK(lwy_threshold(4, 1) == doctest::Approx(109.0 / 30.0).epsilon(1e-14));
  CHECK(lwy_threshold(3, 1) == doctest::Approx(2.79).epsilon(1e-14));
  CHECK(lwy_threshold(5, 3) == doctest::Approx(5.0 - 1.0 / 6.0 + 1.0 / 49.0).epsilon(1e-14));
  // r even, ceil odd: 6 - (3-1)/7 + 1/56 at (6, 3)? ceil(6/3) = 2 (even); use (6, 1): ceil 6 even
  CHECK(lwy_threshold(6, 1) == doctest::Approx(6.0 - 4.0 / 7.0 + 1.0 / 56.0).epsilon(1e-14));
  // r even, ceil odd: (8, 3) has ceil 3
  CHECK(lwy_threshold(8, 3) == doctest::Approx(8.0 - 2.0 / 9.0 + 1.0 / 90.0).epsilon(1e-14));
  CHECK_THROWS_AS(lwy_threshold(4, 2), Error);
}

TEST_CASE("earlier perfect-matching bounds") {
  CHECK(cgh_cubic_root() == doctest::Approx(2.85577).epsilon(1e-5));
  const double theta = cgh_cubic_root();
  CHECK(std::abs(((theta - 1) * theta - 6) * theta + 2) < 1e-10);
  CHECK(prior_1factor_thresholds(3).cgh == theta);
  CHECK(prior_1factor_thresholds(4).bh == doctest::Approx(3.6).epsilon(1e-15));
  CHECK(prior_1factor_thresholds(5).bh == doctest::Approx(4.0 + 3.0 / 7.0).epsilon(1e-15));
  CHECK(prior_1factor_thresholds(4).cgh == doctest::Approx(0.5 * (2.0 + std::sqrt(28.0))).epsilon(1e-15));
  CHECK_THROWS_AS(prior_1factor_thresholds(2), Error);
}

TEST_CASE("extremal construction") {
  // (4,1): eta = 2, K3 join complement(K2) = K5 minus an edge.
  const auto p41 = threshold_params(4, 1);
  const auto h41 = build_extremal(p41);
  CHECK(h41.order() == 5);
  CHECK(h41.size() == 9);
  CHECK(h41 == Graph(5, [] {
          std::vector<Edge> es;
          for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = u + 1; v < 5; ++v)
              if (!(u == 3 && v == 4)) es.push_back({u, v});
          return es;
        }()));

  // (5,1): eta = 3, 7 vertices, 16 edges, 3 of degree 4 and 4 of degree 5.
  const auto h51 = build_extremal(threshold_params(5, 1));
  CHECK(h51.order() == 7);
  CHECK(h51.size() == 16);
  int deg4 = 0, deg5 = 0;
  for (Vertex v = 0; v < 7; ++v) (h51.degree(v) == 4 ? deg4 : deg5) += 1;
  CHECK(deg4 == 3);
  CHECK(deg5 == 4);

  // eta = 0: K_{r+1}.
  CHECK(build_extremal(threshold_params(4, 3)) == complete(5));

  CHECK(throws_kind(ErrorKind::DegenerateConstruction, [] { build_extremal(threshold_params(5, 3)); }));
  CHECK(throws_kind(ErrorKind::DegenerateConstruction, [] { build_extremal(threshold_params(9, 3)); }));
  CHECK(throws_kind(ErrorKind::DegenerateConstruction, [] { build_extremal(threshold_params(3, 1)); }));
  // The analytic threshold is still defined there.
  CHECK(threshold_params(9, 3).rho > 0.0);
}

TEST_CASE("extremal partition") {
  auto sizes = [](const VertexPartition& p) {
    std::vector<std::size_t> out;
    for (const auto& b : p.blocks()) out.push_back(b.size());
    return out;
  };
  CHECK(sizes(extremal_partition(threshold_params(5, 1))) == std::vector<std::size_t>{3, 4});
  CHECK(sizes(extremal_partition(threshold_params(4, 1))) == std::vector<std::size_t>{3, 2});
  CHECK(sizes(extremal_partition(threshold_params(4, 3))) == std::vector<std::size_t>{5});
  const auto p71 = threshold_params(7, 1);
  CHECK(is_equitable(build_extremal(p71), extremal_partition(p71)));
}

TEST_CASE("structure and degree profile across the sweep") {
  for (int r = 3; r <= 60; ++r)
    for (int b = 1; b < r; b += 2) {
      const auto p = threshold_params(r, b);
      if (extremal_is_degenerate(p)) {
        REQUIRE(r % 2 == 1);
        REQUIRE(p.eta == 1);
        continue;
      }
      const auto h = build_extremal(p);
      const int x = r % 2;
      REQUIRE(h.order() == r + 1 + x);
      REQUIRE(2 * static_cast<int>(h.size()) == r * (r + 1 + x) - p.eta);
      int low = 0, max_degree = 0;
      for (Vertex v = 0; v < h.order(); ++v) {
        if (h.degree(v) == r - 1) ++low;
        max_degree = std::max(max_degree, h.degree(v));
      }
      REQUIRE(low == p.eta);
      REQUIRE(max_degree == r);
      REQUIRE(is_equitable(h, extremal_partition(p)));
    }
}
