#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "oddfactor/error.hpp"
#include "oddfactor/factor.hpp"
#include "oddfactor/spectral.hpp"
#include "oddfactor/thresholds.hpp"
#include "oracles.hpp"

using namespace oddfactor;
using namespace oddfactor::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an oddfactor::Error");
  return ErrorKind::Internal;
}

// Independent recount of a violation witness.
void check_witness(const Graph& g, int b, const AmahashiViolation& v) {
  auto rest = delete_vertices(g, v.s).graph;
  REQUIRE(odd_component_count(rest) == v.o);
  REQUIRE(v.bound == b * static_cast<int>(v.s.size()));
  REQUIRE(v.o > v.bound);
  REQUIRE(static_cast<int>(v.odd_components.size()) == v.o);
  for (const auto& c : v.odd_components) {
    REQUIRE(c.size() % 2 == 1);
    for (Vertex u : c) REQUIRE(!v.s.contains(u));
  }
}

}  // namespace

TEST_CASE("Amahashi condition on small examples") {
  auto star_violation = check_amahashi(star(3), 1);
  REQUIRE(star_violation);
  CHECK(star_violation->s == VertexSet{0});
  CHECK(star_violation->o == 3);
  CHECK(star_violation->bound == 1);
  check_witness(star(3), 1, *star_violation);

  // With b = 3 the star itself is the factor.
  CHECK_FALSE(check_amahashi(star(3), 3));

  std::vector<Graph> triangles{cycle(3), cycle(3)};
  auto two_triangles = disjoint_union(triangles);
  auto tv = check_amahashi(two_triangles, 5);
  REQUIRE(tv);
  CHECK(tv->s.size() == 0);
  CHECK(tv->o == 2);
  check_witness(two_triangles, 5, *tv);

  CHECK_FALSE(check_amahashi(cycle(6), 1));
  CHECK_FALSE(check_amahashi(complete(4), 1));
  CHECK_FALSE(check_amahashi(petersen(), 1));
  CHECK_FALSE(check_amahashi(empty(0), 1));

  CHECK(kind_of([] { check_amahashi(complete(4), 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { check_amahashi(complete(4), 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { check_amahashi(cycle(23), 1); }) == ErrorKind::SizeLimit);
  CHECK(kind_of([] { check_amahashi(cycle(12), 1, 10); }) == ErrorKind::SizeLimit);
  CHECK(kind_of([] { check_amahashi(cycle(64), 1, 100); }) == ErrorKind::SizeLimit);
}

TEST_CASE("factor finder on small examples") {
  auto c6 = find_odd_factor(cycle(6), 1);
  REQUIRE(c6);
  CHECK(c6->edges.size() == 3);
  CHECK(verify_certificate(cycle(6), 1, *c6));

  auto k4 = find_odd_factor(complete(4), 3);
  REQUIRE(k4);
  CHECK(verify_certificate(complete(4), 3, *k4));

  CHECK_FALSE(find_odd_factor(star(3), 1));
  CHECK_FALSE(find_odd_factor(cycle(5), 1));
  CHECK_FALSE(find_odd_factor(empty(2), 1));
  CHECK(find_odd_factor(empty(0), 1));

  auto pm = find_odd_factor(petersen(), 1);
  REQUIRE(pm);
  CHECK(pm->edges.size() == 5);
  CHECK(verify_certificate(petersen(), 1, *pm));

  CHECK(kind_of([] { find_odd_factor(complete(4), 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { find_odd_factor(complete(12), 1); }) == ErrorKind::SizeLimit);
  CHECK(find_odd_factor(complete(12), 1, FinderOptions{66}));
}

TEST_CASE("certificate defects") {
  const auto k4 = complete(4);
  CHECK(verify_certificate(k4, 1, {{{0, 1}, {2, 3}}, {1, 1, 1, 1}}));
  CHECK(verify_certificate(k4, 1, {{{1, 0}, {3, 2}}, {}}));

  auto c4 = cycle(4);
  auto r = verify_certificate(c4, 1, {{{0, 2}, {1, 3}}, {}});
  CHECK(r.defect == CertificateDefect::ForeignEdge);
  CHECK_FALSE(r);
  CHECK(verify_certificate(k4, 1, {{{0, 4}}, {}}).defect == CertificateDefect::ForeignEdge);
  CHECK(verify_certificate(k4, 1, {{{2, 2}}, {}}).defect == CertificateDefect::ForeignEdge);

  r = verify_certificate(k4, 1, {{{0, 1}, {1, 0}, {2, 3}}, {}});
  CHECK(r.defect == CertificateDefect::RepeatedEdge);
  CHECK(r.where == 0);

  r = verify_certificate(k4, 1, {{{0, 1}, {2, 3}}, {1, 1, 3, 1}});
  CHECK(r.defect == CertificateDefect::DegreeMismatch);
  CHECK(r.where == 2);
  CHECK(verify_certificate(k4, 1, {{{0, 1}, {2, 3}}, {1, 1}}).defect ==
        CertificateDefect::DegreeMismatch);

  r = verify_certificate(k4, 1, {{{0, 1}}, {}});
  CHECK(r.defect == CertificateDefect::DegreeZero);
  CHECK(r.where == 2);

  r = verify_certificate(k4, 3, {{{0, 1}, {0, 2}, {1, 3}}, {}});
  CHECK(r.defect == CertificateDefect::EvenDegree);
  CHECK(r.where == 0);

  r = verify_certificate(k4, 1, {{{0, 1}, {0, 2}, {0, 3}}, {}});
  CHECK(r.defect == CertificateDefect::DegreeAboveB);
  CHECK(r.where == 0);

  CHECK(std::string(to_string(CertificateDefect::EvenDegree)).size() > 0);
}

TEST_CASE("small-boundary components") {
  // Star with 3 leaves, S = centre, r = 3, b = 1: every leaf has boundary 1 < 3.
  auto comps = small_boundary_components(star(3), {0}, 3, 1);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].component == VertexSet{1});
  CHECK(comps[0].boundary == 1);

  // b = 3 makes ceil(r/b) = 1, so nothing qualifies.
  CHECK(small_boundary_components(star(3), {0}, 3, 3).empty());

  // Even components are ignored.
  CHECK(small_boundary_components(path(3), {0}, 3, 1).empty());

  CHECK(kind_of([] { small_boundary_components(star(3), {0}, 0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("exhaustive agreement with the brute-force oracle for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const auto g = graph_from_mask(n, mask);
      for (int b : {1, 3, 5}) {
        const bool oracle = brute_force_has_odd_factor(g, b);
        const auto cert = find_odd_factor(g, b);
        const auto violation = check_amahashi(g, b);
        REQUIRE(cert.has_value() == oracle);
        REQUIRE(!violation.has_value() == oracle);
        if (cert) REQUIRE(verify_certificate(g, b, *cert));
        if (violation) check_witness(g, b, *violation);
      }
    }
  }
}

TEST_CASE("finder and Amahashi agree on every graph with 6 vertices") {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
    const auto g = graph_from_mask(6, mask);
    for (int b : {1, 3, 5}) {
      const auto cert = find_odd_factor(g, b);
      const auto violation = check_amahashi(g, b);
      REQUIRE(cert.has_value() != violation.has_value());
      if (cert) REQUIRE(verify_certificate(g, b, *cert));
    }
  }
}

TEST_CASE("random graphs up to 12 vertices") {
  std::mt19937_64 rng(2024);
  int with_factor = 0, without = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = 0.15 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto g = random_gnp(n, p, rng);
    const int b = std::array{1, 3, 5}[rng() % 3];
    const auto cert = find_odd_factor(g, b);
    const auto violation = check_amahashi(g, b);
    REQUIRE(cert.has_value() != violation.has_value());
    if (g.size() <= 18) REQUIRE(brute_force_has_odd_factor(g, b) == cert.has_value());
    if (cert) {
      REQUIRE(verify_certificate(g, b, *cert));
      ++with_factor;
    } else {
      check_witness(g, b, *violation);
      ++without;
    }
  }
  // Both outcomes should be exercised.
  CHECK(with_factor > 50);
  CHECK(without > 50);
}

TEST_CASE("odd order rules out every odd factor") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + 2 * static_cast<int>(rng() % 6);
    const auto g = random_gnp(n, 0.6, rng);
    for (int b : {1, 3, 5}) {
      REQUIRE_FALSE(find_odd_factor(g, b));
      REQUIRE(check_amahashi(g, b));
    }
  }
}

TEST_CASE("counting step on regular graphs without a perfect matching") {
  SUBCASE("cubic") {
    const auto g = cubic_without_perfect_matching();
    REQUIRE(is_regular(g, 3));
    const auto v = check_amahashi(g, 1);
    REQUIRE(v);
    CHECK(v->s == VertexSet{0});
    CHECK(v->o == 3);
    CHECK(v->o >= v->bound + 2);
    CHECK(small_boundary_components(g, v->s, 3, 1).size() >= 3);
    CHECK_FALSE(find_odd_factor(g, 1));
    // Contrapositive: no factor forces lambda_3 up to the threshold.
    CHECK(lambda_k(g, 3) >= threshold_params(3, 1).rho - 1e-9);
  }
  SUBCASE("quartic") {
    const auto g = quartic_without_perfect_matching();
    REQUIRE(is_regular(g, 4));
    const auto v = check_amahashi(g, 1);
    REQUIRE(v);
    CHECK(v->s == VertexSet{0, 1});
    CHECK(v->o == 4);
    CHECK(v->o >= v->bound + 2);
    const auto small = small_boundary_components(g, v->s, 4, 1);
    CHECK(small.size() >= 3);
    for (const auto& c : small) CHECK(c.boundary == 2);
    CHECK_FALSE(find_odd_factor(g, 1));
    CHECK(lambda_k(g, 3) >= threshold_params(4, 1).rho - 1e-9);
    CHECK(find_odd_factor(g, 3).has_value() == !check_amahashi(g, 3).has_value());
  }
}
