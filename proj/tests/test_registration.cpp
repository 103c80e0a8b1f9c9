#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lorsim/catalog.hpp"
#include "lorsim/errors.hpp"
#include "lorsim/registration.hpp"
#include "lorsim/split_quaternion.hpp"
#include "support.hpp"

using namespace lorsim;

namespace {

CurveSamples timelike_fixture() {
  return builtin("example_or_ii", {{"a", 2.0}}).sample(0.0, 2.0, 1501);
}

CurveSamples spacelike_fixture() {
  return builtin("example_or_iii", {{"a", 2.0}}).sample(0.0, 2.0, 1501);
}

CurveSamples circle_fixture() {
  CurveSamples c;
  c.param_kind = ParamKind::ArcLength;
  const std::size_t n = 2001;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = 2 * M_PI * static_cast<double>(i) / static_cast<double>(n - 1);
    c.params.push_back(s);
    c.points.push_back({0.0, std::cos(s), std::sin(s)});
    c.d1.push_back({0.0, -std::sin(s), std::cos(s)});
    c.d2.push_back({0.0, -std::cos(s), -std::sin(s)});
    c.d3.push_back({0.0, std::sin(s), -std::cos(s)});
  }
  return c;
}

}  // namespace

TEST_CASE("identical curves register with the identity") {
  const auto a = timelike_fixture();
  const auto m = estimate_similarity(a, a);
  CHECK(m.residual < 1e-10);
  CHECK(m.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.orientation == Orientation::Preserving);
  CHECK(m.sign_pattern == SignPattern::Direct);
  REQUIRE(m.f.has_value());
  CHECK(euclidean_norm(m.f->b) < 1e-9);
}

TEST_CASE("synthetic ground truth is recovered on both causal characters") {
  for (const auto& fixture : {timelike_fixture(), spacelike_fixture()}) {
    for (int seed = 0; seed < 10; ++seed) {
      const PSimilarity f = random_psimilarity(seed, 0.5, 2.0);
      const auto b = transform_curve(fixture, f);
      const auto m = estimate_similarity(fixture, b);
      CHECK(std::fabs(m.mu - f.mu) / f.mu < 1e-6);
      CHECK(m.residual < 1e-6);
      CHECK(m.mu_spread < 1e-6);
      CHECK(m.orientation == Orientation::Preserving);
      REQUIRE(m.f.has_value());
      CHECK(verify_match(fixture, b, *m.f) < 1e-6);
    }
  }
}

TEST_CASE("orientation-reversing ground truth is recovered via the flip pattern") {
  const auto a = spacelike_fixture();
  for (int seed = 100; seed < 110; ++seed) {
    PSimilarity f = random_psimilarity(seed, 0.5, 2.0);
    f.mu = -f.mu;
    const auto b = transform_curve(a, f);
    const auto m = estimate_similarity(a, b);
    CHECK(std::fabs(m.mu - f.mu) / std::fabs(f.mu) < 1e-6);
    CHECK(m.residual < 1e-6);
    CHECK(m.orientation == Orientation::Reversing);
    const bool flip_pattern = m.sign_pattern == SignPattern::BinormalFlip ||
                              m.sign_pattern == SignPattern::BinormalFlipNegated;
    CHECK(flip_pattern);
    REQUIRE(m.f.has_value());
    CHECK(verify_match(a, b, *m.f) < 1e-6);
  }
}

TEST_CASE("time-reversing alignments fall back to the matrix form") {
  // diag(-1,-1,1) is pseudo-orthogonal with det +1 but flips the time
  // orientation, so it is not a split-quaternion conjugation. The match must
  // still close, carrying the linear part instead of a quaternion.
  const auto a = spacelike_fixture();
  auto flip = [](const Vec3& v) { return Vec3{-v.x0, -v.x1, v.x2}; };
  CurveSamples b = a;
  for (auto& p : b.points) p = flip(p);
  for (auto* ch : {&b.d1, &b.d2, &b.d3})
    for (auto& v : *ch) v = flip(v);

  const auto m = estimate_similarity(a, b);
  CHECK(m.residual < 1e-8);
  CHECK_FALSE(m.f.has_value());
  CHECK(m.orientation == Orientation::Preserving);
  CHECK(euclidean_norm(m.apply(a.points[37]) - b.points[37]) < 1e-8);
}

TEST_CASE("profiles that differ beyond the threshold are rejected") {
  const auto a = builtin("example_or_i", {{"a", 1.0}}).sample();
  const auto b = builtin("self_similar_t", {{"a", 1.0}, {"b", 0.5}}).sample();
  CHECK_THROWS_AS(estimate_similarity(a, b), PShapeMismatchError);
  try {
    estimate_similarity(a, b);
  } catch (const PShapeMismatchError& e) {
    CHECK(e.distance() == doctest::Approx(0.5).epsilon(1e-6));
  }
}

TEST_CASE("curves of different causal character are rejected") {
  CHECK_THROWS_AS(estimate_similarity(timelike_fixture(), spacelike_fixture()),
                  GeometryError);
}

TEST_CASE("registration is equivariant") {
  const auto a = timelike_fixture();
  const auto b = transform_curve(a, random_psimilarity(41, 0.5, 2.0));
  const double base = estimate_similarity(a, b).residual;
  for (int seed : {7, 8}) {
    const PSimilarity g = random_psimilarity(seed, 0.5, 2.0);
    const double moved =
        estimate_similarity(transform_curve(a, g), transform_curve(b, g)).residual;
    CHECK(std::fabs(moved - base) < 1e-6);
  }
}

TEST_CASE("verify_match") {
  const auto a = timelike_fixture();
  const PSimilarity f = random_psimilarity(55, 0.5, 2.0);
  const auto b = transform_curve(a, f);

  SUBCASE("exact match") { CHECK(verify_match(a, b, f) < 1e-10); }

  SUBCASE("residual grows proportionally with a mu perturbation") {
    PSimilarity off = f;
    off.mu += 1e-3;
    const double r1 = verify_match(a, b, off);
    off.mu = f.mu + 2e-3;
    const double r2 = verify_match(a, b, off);
    CHECK(r1 > 1e-5);
    CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(0.05));
  }

  SUBCASE("disjoint sigma ranges") {
    const auto left = builtin("example_or_ii").sample(0.0, 1.0, 501);
    const auto right = builtin("example_or_ii").sample(3.0, 4.0, 501);
    CHECK_THROWS_AS(verify_match(left, right, PSimilarity::identity()), GeometryError);
  }
}

TEST_CASE("registration works on points-only samples (finite-difference path)") {
  CurveSamples a = builtin("example_or_ii", {{"a", 2.0}}).sample(0.0, 2.0, 2001);
  a.d1.clear();
  a.d2.clear();
  a.d3.clear();
  const PSimilarity f = random_psimilarity(21, 0.5, 2.0);
  CurveSamples b = a;
  for (auto& p : b.points) p = f.apply(p);

  const auto m = estimate_similarity(a, b);
  CHECK(std::fabs(m.mu - f.mu) / f.mu < 1e-6);
  CHECK(m.residual < 1e-6);
}

TEST_CASE("partial overlap and mismatched densities still register") {
  const auto a = builtin("example_or_ii", {{"a", 2.0}}).sample(0.0, 2.0, 2001);
  const PSimilarity f = random_psimilarity(33, 0.5, 2.0);
  // b covers only part of a's range and is sampled more coarsely
  const auto b =
      transform_curve(builtin("example_or_ii", {{"a", 2.0}}).sample(0.5, 1.8, 901), f);

  const auto m = estimate_similarity(a, b);
  CHECK(m.residual < 1e-5);
  CHECK(std::fabs(m.mu - f.mu) / f.mu < 1e-6);
}

TEST_CASE("self-similarity detection") {
  const auto q = is_self_similar(builtin("self_similar_q", {{"a", 2.0}, {"b", 1.0}}).sample(), 1e-5);
  CHECK(q.self_similar);
  CHECK(q.kappa_tilde == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(q.tau_tilde == doctest::Approx(2.0).epsilon(1e-5));

  const auto log_curve = is_self_similar(builtin("example_log_shape", {{"a", 2.0}}).sample(), 1e-5);
  CHECK_FALSE(log_curve.self_similar);

  const auto circle = is_self_similar(circle_fixture(), 1e-5);
  CHECK(circle.self_similar);
  CHECK(std::fabs(circle.kappa_tilde) < 1e-6);
  CHECK(std::fabs(circle.tau_tilde) < 1e-6);
}
