#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lw/minkowski.hpp"

using namespace lw;

TEST_CASE("lorentz_dot basis products") {
  Chart a2 = Chart::a2();
  CHECK(lorentz_dot({{1, 0, 0}, a2}, {{1, 0, 0}, a2}) == 1.0);
  CHECK(lorentz_dot({{0, 0, 1}, a2}, {{0, 0, 1}, a2}) == -1.0);

  Chart nb = Chart::null_basis();
  CHECK(lorentz_dot({{1, 0, 0}, nb}, {{0, 1, 0}, nb}) == -1.0);
  CHECK(lorentz_dot({{1, 0, 0}, nb}, {{1, 0, 0}, nb}) == 0.0);
  CHECK(lorentz_dot({{0, 0, 1}, nb}, {{0, 0, 1}, nb}) == 1.0);

  CHECK_THROWS_AS(lorentz_dot({{1, 0, 0}, a2}, {{1, 0, 0}, nb}), std::invalid_argument);
}

TEST_CASE("causal classification") {
  Chart a2 = Chart::a2();
  CHECK(causal_character({{0, 1, 1}, a2}) == CausalCharacter::LightLike);
  CHECK(causal_character({{0, 0, 1}, a2}) == CausalCharacter::TimeLike);
  CHECK(causal_character({{1, 0, 0}, a2}) == CausalCharacter::SpaceLike);
  // null basis: <(1,2,0),(1,2,0)> = -2*1*2 = -4
  CHECK(causal_character({{1, 2, 0}, Chart::null_basis()}) == CausalCharacter::TimeLike);
  CHECK_THROWS_AS(causal_character({{0, 0, 0}, a2}), std::invalid_argument);
}

TEST_CASE("lorentz_cross orthogonality and determinant convention") {
  Chart a2 = Chart::a2();
  MVec3 u{{1, 0, 0}, a2}, v{{0, 1, 0}, a2};
  MVec3 w = lorentz_cross(u, v);
  CHECK(w.v[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(w.v[1] == Catch::Approx(0.0).margin(1e-15));
  CHECK(w.v[2] == Catch::Approx(-1.0).margin(1e-15));

  MVec3 uu = lorentz_cross(u, u);
  CHECK(euclid_norm2(uu.v) == 0.0);

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (int it = 0; it < 200; ++it) {
    Chart ch = (it % 2 == 0) ? a2 : Chart::null_basis();
    MVec3 a{{dist(rng), dist(rng), dist(rng)}, ch};
    MVec3 b{{dist(rng), dist(rng), dist(rng)}, ch};
    MVec3 c = lorentz_cross(a, b);
    CHECK(std::abs(lorentz_dot(c, a)) < 1e-12);
    CHECK(std::abs(lorentz_dot(c, b)) < 1e-12);
    // <a x b, e> = det(a, b, e)
    MVec3 e{{dist(rng), dist(rng), dist(rng)}, ch};
    Real det = a.v[0] * (b.v[1] * e.v[2] - b.v[2] * e.v[1]) -
               a.v[1] * (b.v[0] * e.v[2] - b.v[2] * e.v[0]) +
               a.v[2] * (b.v[0] * e.v[1] - b.v[1] * e.v[0]);
    CHECK(lorentz_dot(c, e) == Catch::Approx(det).margin(1e-10));
  }
}

TEST_CASE("rotations are isometries obeying the group law") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-3, 3);
  for (AxisKind k : {AxisKind::A1, AxisKind::A2, AxisKind::A3}) {
    for (int it = 0; it < 350; ++it) {
      Real s = dist(rng), t = dist(rng);
      Isometry3 rs = rotation(k, s), rt = rotation(k, t), rst = rotation(k, s + t);
      CHECK(rs.isometry_defect() < 1e-12);
      Mat3 prod = mat3_mul(rs.m, rt.m);
      Real gap = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gap = std::max(gap, std::abs(prod[i][j] - rst.m[i][j]));
      CHECK(gap < 1e-12);

      // orbit invariance of the product
      MVec3 a{{dist(rng), dist(rng), dist(rng)}, rs.chart};
      MVec3 b{{dist(rng), dist(rng), dist(rng)}, rs.chart};
      CHECK(lorentz_dot(rs.apply(a), rs.apply(b)) ==
            Catch::Approx(lorentz_dot(a, b)).margin(1e-11));
    }
  }

  SECTION("identity and tabulated values") {
    Isometry3 r0 = rotation(AxisKind::A2, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(r0.m[i][j] == (i == j ? 1.0 : 0.0));

    // parabolic action on the second basis vector
    MVec3 y{{0, 1, 0}, Chart::null_basis()};
    Real t = 1.7;
    MVec3 im = rotation(AxisKind::A3, t).apply(y);
    CHECK(im.v[0] == Catch::Approx(0.5 * t * t));
    CHECK(im.v[1] == Catch::Approx(1.0));
    CHECK(im.v[2] == Catch::Approx(t));

    MVec3 yy{{0, 1, 0}, Chart::a2()};
    MVec3 hy = rotation(AxisKind::A2, std::log(2.0)).apply(yy);
    CHECK(hy.v[1] == Catch::Approx(1.25).epsilon(1e-14));
    CHECK(hy.v[2] == Catch::Approx(0.75).epsilon(1e-14));
  }
}

TEST_CASE("fundamental regions") {
  Chart a2 = Chart::a2();
  CHECK(fundamental_region({{5, 0.1, 1}, a2}, AxisKind::A2) == RegionLabel::RPlus);
  CHECK(fundamental_region({{5, 0.1, -1}, a2}, AxisKind::A2) == RegionLabel::RMinus);
  CHECK(fundamental_region({{5, 1, 0.1}, a2}, AxisKind::A2) == RegionLabel::QPlus);
  CHECK(fundamental_region({{5, -1, 0.1}, a2}, AxisKind::A2) == RegionLabel::QMinus);
  CHECK(fundamental_region({{0, 1, 1}, a2}, AxisKind::A2) == RegionLabel::DegeneratePlane);
  CHECK(fundamental_region({{3, 0, 0}, a2}, AxisKind::A2) == RegionLabel::Axis);

  Chart nb = Chart::null_basis();
  CHECK(fundamental_region({{7, -2, 3}, nb}, AxisKind::A3) == RegionLabel::SMinus);
  CHECK(fundamental_region({{7, 2, 3}, nb}, AxisKind::A3) == RegionLabel::SPlus);
  CHECK(fundamental_region({{7, 0, 3}, nb}, AxisKind::A3) == RegionLabel::TPlane);

  Chart a1 = Chart::a1();
  CHECK(fundamental_region({{2, 0.5, 0}, a1}, AxisKind::A1) == RegionLabel::Exterior);
  CHECK(fundamental_region({{2, 0, 0}, a1}, AxisKind::A1) == RegionLabel::Axis);

  SECTION("region is constant along orbits") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2, 2);
    for (int it = 0; it < 500; ++it) {
      MVec3 p{{dist(rng), dist(rng), dist(rng)}, a2};
      if (std::abs(p.v[2] * p.v[2] - p.v[1] * p.v[1]) < 1e-3) continue;  // near boundary
      RegionLabel r0 = fundamental_region(p, AxisKind::A2);
      Real t = dist(rng);
      RegionLabel r1 = fundamental_region(rotation(AxisKind::A2, t).apply(p), AxisKind::A2);
      CHECK(r0 == r1);
    }
  }
}

TEST_CASE("orbit descriptors") {
  Chart a1 = Chart::a1();
  auto o1 = orbit_descriptor({{3, 0, 0}, a1}, AxisKind::A1);
  CHECK(o1.type == OrbitType::Point);

  Chart a2 = Chart::a2();
  auto o2 = orbit_descriptor({{0, 1, 1}, a2}, AxisKind::A2);
  CHECK(o2.type == OrbitType::HalfLine);

  auto o3 = orbit_descriptor({{0, 0, 2}, a2}, AxisKind::A2);
  CHECK(o3.type == OrbitType::HyperbolaBranch);
  CHECK(o3.invariant == Catch::Approx(-4.0));  // y^2 - z^2 = -4, so z^2 - y^2 = 4

  // invariance of y^2 - z^2 under the A2 motion
  MVec3 p{{0, 0, 2}, a2};
  MVec3 q = rotation(AxisKind::A2, 0.8).apply(p);
  CHECK(q.v[1] * q.v[1] - q.v[2] * q.v[2] == Catch::Approx(-4.0).margin(1e-12));
  CHECK(q.v[2] > 0);  // stays on the branch through p

  Chart nb = Chart::null_basis();
  CHECK(orbit_descriptor({{1, 0, 2}, nb}, AxisKind::A3).type == OrbitType::Line);
  CHECK(orbit_descriptor({{1, 2, 0}, nb}, AxisKind::A3).type == OrbitType::Parabola);
  CHECK(orbit_descriptor({{1, 0, 0}, nb}, AxisKind::A3).type == OrbitType::Point);

  // parabola orbit: sigma_t (a1,a2,a3) stays on x = (z-a3)^2/(2 a2) + a3(z-a3)/a2 + a1
  MVec3 pp{{0.3, 1.5, -0.2}, nb};
  Real a1c = pp.v[0], a2c = pp.v[1], a3c = pp.v[2];
  for (Real t : {-1.0, 0.4, 2.0}) {
    MVec3 im = rotation(AxisKind::A3, t).apply(pp);
    Real z = im.v[2];
    Real expect = (z - a3c) * (z - a3c) / (2 * a2c) + a3c * (z - a3c) / a2c + a1c;
    CHECK(im.v[0] == Catch::Approx(expect).margin(1e-12));
    CHECK(im.v[1] == Catch::Approx(a2c));
  }
}
