#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lorsim/minkowski.hpp"
#include "support.hpp"

using namespace lorsim;
using testutil::random_spacelike;
using testutil::random_timelike;
using testutil::random_vec;

TEST_CASE("inner product on basis and null vectors") {
  CHECK(inner({1, 0, 0}, {1, 0, 0}) == -1.0);
  CHECK(inner({0, 1, 0}, {0, 1, 0}) == 1.0);
  CHECK(inner({1, 1, 0}, {1, 1, 0}) == 0.0);
}

TEST_CASE("inner product is symmetric and bilinear") {
  auto gen = testutil::rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 x = random_vec(gen), y = random_vec(gen), z = random_vec(gen);
    const double a = 1.7, b = -0.4;
    CHECK(inner(x, y) == doctest::Approx(inner(y, x)).epsilon(1e-12));
    CHECK(inner(x * a + y * b, z) ==
          doctest::Approx(a * inner(x, z) + b * inner(y, z)).epsilon(1e-12));
  }
}

TEST_CASE("norm examples") {
  CHECK(norm({1, 0, 0}) == 1.0);
  CHECK(norm({1, 1, 0}) == 0.0);
  CHECK(norm({3, 5, 0}) == doctest::Approx(4.0));  // sqrt(|-9 + 25|)
}

TEST_CASE("cross product layout, antisymmetry and orthogonality") {
  const Vec3 c = cross({0, 1, 0}, {0, 0, 1});
  CHECK(c.x0 == -1.0);
  CHECK(c.x1 == 0.0);
  CHECK(c.x2 == 0.0);

  auto gen = testutil::rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 x = random_vec(gen), y = random_vec(gen);
    const Vec3 xy = cross(x, y);
    const Vec3 yx = cross(y, x);
    CHECK(xy.x0 == -yx.x0);
    CHECK(xy.x1 == -yx.x1);
    CHECK(xy.x2 == -yx.x2);
    const double scale = 1.0 + euclidean_norm(xy) * euclidean_norm(x);
    CHECK(std::fabs(inner(xy, x)) / scale < 1e-12);
    CHECK(std::fabs(inner(xy, y)) / scale < 1e-12);
  }
  CHECK(euclidean_norm(cross({1.5, -2, 0.25}, {1.5, -2, 0.25})) == 0.0);
}

TEST_CASE("triple product matches the component determinant") {
  auto gen = testutil::rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 x = random_vec(gen), y = random_vec(gen), z = random_vec(gen);
    CHECK(inner(cross(x, y), z) == doctest::Approx(det3(x, y, z)).epsilon(1e-10));
  }
}

TEST_CASE("causal classification with tolerance band") {
  CHECK(causal_character({1, 0, 0}, 1e-12) == CausalCharacter::Timelike);
  CHECK(causal_character({1, 1, 0}, 1e-12) == CausalCharacter::Lightlike);
  CHECK(causal_character({0, 0, 0}, 1e-12) == CausalCharacter::Spacelike);
  CHECK(causal_character({0, 2, -1}, 1e-12) == CausalCharacter::Spacelike);
}

TEST_CASE("causal trichotomy at zero tolerance") {
  auto gen = testutil::rng(104);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec3 v = random_vec(gen);
    int hits = 0;
    const double q = inner(v, v);
    if (q < 0) ++hits;
    if (q > 0 || euclidean_norm(v) == 0.0) ++hits;
    if (q == 0 && euclidean_norm(v) != 0.0) ++hits;
    CHECK(hits == 1);
    CHECK(causal_character(v, 0.0) ==
          (q < 0 ? CausalCharacter::Timelike
                 : (q == 0 && euclidean_norm(v) != 0.0 ? CausalCharacter::Lightlike
                                                       : CausalCharacter::Spacelike)));
  }
}

TEST_CASE("hyperbolic angle between timelike vectors") {
  const AngleResult r = angle_between({std::cosh(1.0), std::sinh(1.0), 0}, {1, 0, 0});
  CHECK(r.kind == AngleKind::Hyperbolic);
  CHECK(r.status == AngleStatus::Ok);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("circular angle between spacelike vectors") {
  const AngleResult zero = angle_between({0, 1, 0}, {0, 1, 0});
  CHECK(zero.kind == AngleKind::Circular);
  CHECK(zero.value == doctest::Approx(0.0));

  const AngleResult right = angle_between({0, 1, 0}, {0, 0, 1});
  CHECK(right.kind == AngleKind::Circular);
  CHECK(right.value == doctest::Approx(M_PI / 2));
}

TEST_CASE("hyperbolic angle between spacelike vectors with |inner| > product") {
  // x, y spacelike with a large inner product: cosh(theta) = |x.y| / (|x||y|)
  const Vec3 x{0, 1, 0};
  const Vec3 y{2, 2.5, 0};  // y.y = 2.25 > 0, x.y = 2.5 > |x||y| = 1.5
  const AngleResult r = angle_between(x, y);
  CHECK(r.kind == AngleKind::Hyperbolic);
  CHECK(r.value == doctest::Approx(std::acosh(2.5 / 1.5)).epsilon(1e-12));
}

TEST_CASE("angle edge cases report a reason") {
  CHECK(angle_between({1, 1, 0}, {0, 1, 0}).status == AngleStatus::NullInput);
  CHECK(angle_between({1, 0, 0}, {0, 1, 0}).status == AngleStatus::MixedCausality);
  CHECK(angle_between({1, 0, 0}, {-1, 0, 0}).status == AngleStatus::OppositeOrientation);
  // spacelike pair on the degenerate boundary |x.y| = |x||y|
  const Vec3 x{0, 1, 0};
  const Vec3 ell{1, 0, 1};  // null, orthogonal to x
  const AngleResult r = angle_between(x, x + ell);
  CHECK(r.kind == AngleKind::Undefined);
  CHECK(r.status == AngleStatus::DegeneratePair);
}

TEST_CASE("norm identity |x x y| = |x||y| sinh(theta) for timelike pairs") {
  auto gen = testutil::rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec3 x = random_timelike(gen), y = random_timelike(gen);
    const AngleResult r = angle_between(x, y);
    REQUIRE(r.status == AngleStatus::Ok);
    CHECK(norm(cross(x, y)) ==
          doctest::Approx(norm(x) * norm(y) * std::sinh(r.value)).epsilon(1e-9));
  }
}

TEST_CASE("cross of same-cone timelike vectors is spacelike") {
  auto gen = testutil::rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 x = random_timelike(gen), y = random_timelike(gen);
    if (euclidean_norm(cross(x, y)) < 1e-9) continue;  // near-parallel pair
    CHECK(causal_character(cross(x, y)) == CausalCharacter::Spacelike);
  }
}

TEST_CASE("unit sphere membership") {
  const SphereCheck h = on_unit_sphere({1, 0, 0}, UnitSphere::Hyperbolic);
  CHECK(h.on);
  CHECK(h.sheet == SphereSheet::Future);
  const SphereCheck hp = on_unit_sphere({-1, 0, 0}, UnitSphere::Hyperbolic);
  CHECK(hp.on);
  CHECK(hp.sheet == SphereSheet::Past);
  CHECK(on_unit_sphere({0, 1, 0}, UnitSphere::Lorentzian).on);
  CHECK_FALSE(on_unit_sphere({1, 1, 0}, UnitSphere::Hyperbolic).on);
  CHECK_FALSE(on_unit_sphere({1, 1, 0}, UnitSphere::Lorentzian).on);
}

TEST_CASE("Mat3 basics") {
  const Mat3 id = Mat3::identity();
  CHECK(id.det() == doctest::Approx(1.0));
  const Mat3 m = Mat3::from_columns({1, 2, 0}, {0, 1, 0}, {0, 0, 3});
  CHECK(m.det() == doctest::Approx(3.0));
  const Vec3 v = m.apply({1, 1, 1});
  CHECK(v.x0 == doctest::Approx(1.0));
  CHECK(v.x1 == doctest::Approx(3.0));
  CHECK(v.x2 == doctest::Approx(3.0));
  CHECK(pseudo_orthogonality_defect(Mat3::identity()) == doctest::Approx(0.0));
}
