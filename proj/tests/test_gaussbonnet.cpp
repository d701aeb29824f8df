#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lw/gaussbonnet.hpp"
#include "lw/surface.hpp"

using namespace lw;

namespace {

Vec2 unit_at(const SurfaceChart& chart, const Vec2& p, Vec2 v) {
  Real q = chart.dot(v, v, p);
  return {v[0] / std::sqrt(std::abs(q)), v[1] / std::sqrt(std::abs(q))};
}

/// Star-shaped random polygon with straight non-null sides, counterclockwise.
NonNullPolygon random_polygon(const SurfaceChart& chart, std::mt19937& rng, Vec2 center,
                              Real rmin, Real rmax, std::size_t side_samples = 600) {
  std::uniform_int_distribution<int> nd(3, 7);
  std::uniform_real_distribution<Real> ad(0, 2 * kPi), rd(rmin, rmax);
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = nd(rng);
    std::vector<Real> ang(n);
    for (auto& a : ang) a = ad(rng);
    std::sort(ang.begin(), ang.end(), std::greater<Real>());  // clockwise
    bool spaced = true;
    for (int i = 0; i + 1 < n; ++i)
      if (ang[i] - ang[i + 1] < 0.3) spaced = false;
    if (!spaced || ang.back() + 2 * kPi - ang.front() < 0.3) continue;
    NonNullPolygon poly;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Real r0 = rd(rng), r1 = rd(rng);
      Vec2 a = {center[0] + r0 * std::cos(ang[i]), center[1] + r0 * std::sin(ang[i])};
      Vec2 b = {center[0] + r1 * std::cos(ang[(i + 1) % n]),
                center[1] + r1 * std::sin(ang[(i + 1) % n])};
      if (i > 0) a = poly.sides.back().pts.back();
      if (i == n - 1) b = poly.sides.front().pts.front();
      Side s = make_line_side(a, b, side_samples);
      try {
        side_causal_character(chart, s);
      } catch (const std::domain_error&) {
        ok = false;
      }
      poly.sides.push_back(std::move(s));
    }
    if (!ok) continue;
    try {
      poly.validate(chart);
      return poly;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("random_polygon: no admissible polygon found");
}

/// Geodesic arc shot from p in direction v (unit), with the affine length
/// tuned by secant iteration so the endpoint lands on the line t = t_stop.
/// Keeps the side uniformly parametrized.
Side geodesic_until_t(const SurfaceChart& chart, Vec2 p, Vec2 v, Real t_stop,
                      Real max_len = 4.0, std::size_t n = 4096) {
  Side full = make_geodesic_side(chart, p, v, max_len, n);
  Real dir = sgn(t_stop - p[1]);
  std::size_t cut = 0;
  for (std::size_t i = 1; i < full.pts.size(); ++i) {
    if (dir * (full.pts[i][1] - t_stop) >= 0) {
      cut = i;
      break;
    }
  }
  REQUIRE(cut > 2);
  Real h = max_len / static_cast<Real>(n - 1);
  Real len0 = h * static_cast<Real>(cut - 1), len1 = h * static_cast<Real>(cut);
  auto t_end = [&](Real len) {
    return make_geodesic_side(chart, p, v, len, 256).pts.back()[1];
  };
  Real f0 = t_end(len0) - t_stop, f1 = t_end(len1) - t_stop;
  for (int it = 0; it < 60 && std::abs(f1) > 1e-13; ++it) {
    Real len2 = len1 - f1 * (len1 - len0) / (f1 - f0);
    len0 = len1;
    f0 = f1;
    len1 = len2;
    f1 = t_end(len1) - t_stop;
  }
  Side out = make_geodesic_side(chart, p, v, len1, 1024);
  out.pts.back()[1] = t_stop;  // pin the endpoint for exact closure
  return out;
}

}  // namespace

TEST_CASE("perp: orthogonality, closure, causal swap") {
  FlatLorentzChart flat;
  Vec2 p = {0, 0};
  SECTION("double perp closes and preserves units") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<Real> d(-2, 2);
    for (int i = 0; i < 300; ++i) {
      Vec2 v = {d(rng), d(rng)};
      Real q = flat.dot(v, v, p);
      if (std::abs(q) < 1e-3) continue;
      v = unit_at(flat, p, v);
      Vec2 w = perp(flat, p, v);
      CHECK(std::abs(flat.dot(v, w, p)) < 1e-12);
      CHECK(std::abs(std::abs(flat.dot(w, w, p)) - 1) < 1e-12);
      // causal swap in the Lorentzian plane
      CHECK(flat.dot(w, w, p) * flat.dot(v, v, p) < 0);
      Vec2 vv = perp(flat, p, w);  // quarter turn squared: -identity
      CHECK(std::abs(vv[0] + v[0]) < 1e-12);
      CHECK(std::abs(vv[1] + v[1]) < 1e-12);
    }
  }
  SECTION("fixed orientation example") {
    // space-like input maps to the past-pointing unit, time-like future
    // input to the rightward space-like unit
    Vec2 w = perp(flat, p, {1, 0});
    CHECK(w[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(w[1] == Catch::Approx(-1.0));
    Vec2 w2 = perp(flat, p, {0, 1});
    CHECK(w2[0] == Catch::Approx(1.0));
    CHECK(w2[1] == Catch::Approx(0.0).margin(1e-14));
  }
  SECTION("null input is rejected") {
    CHECK_THROWS_AS(hyperbolic_angle(flat, p, {1, 1}, {0, 1}), std::domain_error);
  }
}

TEST_CASE("hyperbolic angle") {
  FlatLorentzChart flat;
  Vec2 p = {0, 0};
  SECTION("boost reading off future time-like pairs") {
    CHECK(hyperbolic_angle(flat, p, {0, 1}, {0, 1}) == Catch::Approx(0.0).margin(1e-15));
    for (Real a : {0.5, 1.0, 2.0}) {
      CHECK(hyperbolic_angle(flat, p, {0, 1}, {std::sinh(a), std::cosh(a)}) ==
            Catch::Approx(a).margin(1e-12));
    }
  }
  SECTION("space-like pair reduces to the angle of the perps") {
    for (Real a : {0.3, 1.2}) {
      for (Real b : {-0.4, 0.9}) {
        Vec2 u = {std::cosh(a), std::sinh(a)}, v = {std::cosh(b), std::sinh(b)};
        Real direct = hyperbolic_angle(flat, p, u, v);
        Real via_perp = hyperbolic_angle(flat, p, perp(flat, p, u), perp(flat, p, v));
        CHECK(direct == Catch::Approx(via_perp).margin(1e-12));
        CHECK(direct == Catch::Approx(b - a).margin(1e-12));
      }
    }
  }
  SECTION("additivity along chains of future time-like vectors") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<Real> d(-2, 2);
    for (int i = 0; i < 1000; ++i) {
      Real a = d(rng), b = d(rng), c = d(rng);
      Vec2 u = {std::sinh(a), std::cosh(a)}, v = {std::sinh(b), std::cosh(b)},
           w = {std::sinh(c), std::cosh(c)};
      Real lhs = hyperbolic_angle(flat, p, u, w);
      Real rhs = hyperbolic_angle(flat, p, u, v) + hyperbolic_angle(flat, p, v, w);
      CHECK(lhs == Catch::Approx(rhs).margin(1e-9));
    }
  }
  SECTION("mixed-pair conventions: measured asymmetry is reported, not assumed") {
    // the two case-3 reductions use different perp placements; empirically
    // they come out antisymmetric, which is recorded here as an observation
    std::mt19937 rng(23);
    std::uniform_real_distribution<Real> d(-1.5, 1.5);
    Real worst = 0;
    for (int i = 0; i < 300; ++i) {
      Real a = d(rng), b = d(rng);
      Vec2 u = {std::sinh(a), std::cosh(a)};
      Vec2 v = {std::cosh(b), std::sinh(b)};
      Real uv = hyperbolic_angle(flat, p, u, v);
      Real vu = hyperbolic_angle(flat, p, v, u);
      worst = std::max(worst, std::abs(uv + vu));
    }
    INFO("max |angle[u,v] + angle[v,u]| over mixed pairs = " << worst);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("parallel transport") {
  SECTION("flat chart: constant field") {
    FlatLorentzChart flat;
    Side side = make_line_side({0, 0}, {1.5, 0.7}, 400);
    auto z = parallel_transport(flat, side, {0.3, 1.1});
    for (const auto& zi : z) {
      CHECK(zi[0] == Catch::Approx(0.3).margin(1e-12));
      CHECK(zi[1] == Catch::Approx(1.1).margin(1e-12));
    }
  }
  SECTION("products preserved along curves") {
    DeSitterChart ds;
    Side side = make_line_side({-0.2, 0.1}, {0.4, 0.9}, 2000);
    Vec2 z1 = {0.2, 1.0}, z2 = {1.0, 0.3};
    auto za = parallel_transport(ds, side, z1);
    auto zb = parallel_transport(ds, side, z2);
    Real start = ds.dot(z1, z2, side.pts.front());
    Real worst = 0;
    for (std::size_t i = 0; i < za.size(); ++i)
      worst = std::max(worst, std::abs(ds.dot(za[i], zb[i], side.pts[i]) - start));
    CHECK(worst < 1e-7);
  }
  SECTION("holonomy around a geodesic quadrilateral equals -intK") {
    DeSitterChart ds;
    Vec2 A = {-0.25, 0.0};
    // geodesic quadrilateral traversed clockwise: space-like geodesic from A
    // towards t = 0.8, a meridian, a geodesic back to t = 0, and the closing
    // meridian (meridians are geodesics of this chart)
    Vec2 v1 = unit_at(ds, A, {0.15, 1.0});
    Side s1 = geodesic_until_t(ds, A, v1, 0.8);
    Vec2 B = s1.pts.back();
    Vec2 C = {B[0] + 0.55, B[1]};
    Side s2 = make_line_side(B, C, 1024);
    Vec2 v3 = unit_at(ds, C, {0.1, -1.0});
    Side s3 = geodesic_until_t(ds, C, v3, 0.0);
    Vec2 D = s3.pts.back();
    Side s4 = make_line_side(D, A, 1024);

    NonNullPolygon poly;
    poly.sides = {s1, s2, s3, s4};
    poly.validate(ds);
    auto rep = gauss_bonnet_residual(ds, poly, 16, 64);
    CHECK(std::abs(rep.intKappa) < 1e-4);  // all sides geodesic
    CHECK(std::abs(rep.residual) < 1e-3);

    Vec2 e1, e2;
    ds.frame(A, e1, e2);
    Vec2 z = e2;
    for (auto& side : poly.sides) z = parallel_transport(ds, side, z).back();
    Real qz = ds.dot(z, z, A);
    Vec2 zu = {z[0] / std::sqrt(-qz), z[1] / std::sqrt(-qz)};
    Real hol = hyperbolic_angle(ds, A, zu, e2);
    CHECK(hol == Catch::Approx(rep.intK).margin(1e-3));
    // the angle from the transported vector back to the start equals +intK;
    // from the start to the transported vector it is -intK
    Real hol2 = hyperbolic_angle(ds, A, e2, zu);
    CHECK(hol2 == Catch::Approx(-rep.intK).margin(1e-3));
  }
}

TEST_CASE("Euler relation phi' = -kappa") {
  FlatLorentzChart flat;
  SECTION("geodesic: angle is constant") {
    Side side = make_line_side({0, 0}, {0.4, 1.2}, 800);
    auto chk = euler_angle_check(flat, side, {0, 1});
    CHECK(chk.max_defect < 1e-6);
  }
  SECTION("time-like Lorentzian circle arc, kappa = 1") {
    Side side;
    std::size_t n = 2001;
    for (std::size_t i = 0; i < n; ++i) {
      Real s = -0.8 + 1.6 * static_cast<Real>(i) / static_cast<Real>(n - 1);
      side.pts.push_back({std::cosh(s), std::sinh(s)});
      side.tans.push_back({1.6 * std::sinh(s), 1.6 * std::cosh(s)});
    }
    auto kappa = geodesic_curvature_samples(flat, side);
    for (std::size_t i = n / 4; i < 3 * n / 4; ++i)
      CHECK(std::abs(std::abs(kappa[i]) - 1.0) < 1e-6);
    auto chk = euler_angle_check(flat, side, {0, 1});
    CHECK(chk.max_defect < 1e-5);
  }
  SECTION("space-like arc (case-2 path)") {
    Side side;
    std::size_t n = 2001;
    for (std::size_t i = 0; i < n; ++i) {
      Real s = -0.8 + 1.6 * static_cast<Real>(i) / static_cast<Real>(n - 1);
      side.pts.push_back({std::sinh(s), std::cosh(s)});
      side.tans.push_back({1.6 * std::cosh(s), 1.6 * std::sinh(s)});
    }
    auto chk = euler_angle_check(flat, side, {0, 1});
    CHECK(chk.max_defect < 1e-5);
  }
  SECTION("defect decreases under refinement") {
    auto defect_at = [&](std::size_t n) {
      Side side;
      for (std::size_t i = 0; i < n; ++i) {
        Real s = -0.8 + 1.6 * static_cast<Real>(i) / static_cast<Real>(n - 1);
        side.pts.push_back({std::cosh(s), std::sinh(s)});
        side.tans.push_back({1.6 * std::sinh(s), 1.6 * std::cosh(s)});
      }
      return euler_angle_check(flat, side, {0, 1}).max_defect;
    };
    Real d1 = defect_at(501), d2 = defect_at(1001);
    CHECK(d2 < 0.75 * d1);  // at least first order
  }
}

TEST_CASE("geodesic curvature integral") {
  SECTION("geodesic sides vanish") {
    DeSitterChart ds;
    Side meridian = make_line_side({-0.5, 0.3}, {0.7, 0.3}, 1024);
    CHECK(std::abs(geodesic_curvature_integral(ds, meridian)) < 1e-7);
  }
  SECTION("cylinder orbit circles are intrinsic geodesics") {
    // The cylinder's induced metric is flat, so its orbit circles carry no
    // geodesic curvature (the ambient normal curvature 1/r never enters).
    auto surf = generate_surface(AxisKind::A1, preset_cylinder(1.0, 0, 2, 201),
                                 uniform_grid(0, 2 * kPi, 129));
    RevolutionChart chart(surf);
    Side circle = make_line_side({1.0, 0.0}, {1.0, 2 * kPi}, 2048);
    CHECK(std::abs(geodesic_curvature_integral(chart, circle)) < 1e-9);
  }
  SECTION("null sides are rejected") {
    FlatLorentzChart flat;
    Side bad = make_line_side({0, 0}, {1, 1}, 64);
    CHECK_THROWS_AS(geodesic_curvature_integral(flat, bad), std::domain_error);
  }
}

TEST_CASE("Gauss-Bonnet residual") {
  SECTION("flat coordinate rectangle: all corner angles vanish") {
    FlatLorentzChart flat;
    NonNullPolygon poly;
    poly.sides = {make_line_side({0, 0}, {0, 1}), make_line_side({0, 1}, {1, 1}),
                  make_line_side({1, 1}, {1, 0}), make_line_side({1, 0}, {0, 0})};
    auto rep = gauss_bonnet_residual(flat, poly);
    CHECK(std::abs(rep.sumTheta) < 1e-12);
    CHECK(std::abs(rep.residual) < 1e-8);
  }
  SECTION("hyperboloid rectangle: intK equals the enclosed area") {
    DeSitterChart ds;
    NonNullPolygon poly;
    poly.sides = {make_line_side({-0.4, 0.2}, {-0.4, 1.1}), make_line_side({-0.4, 1.1}, {0.5, 1.1}),
                  make_line_side({0.5, 1.1}, {0.5, 0.2}), make_line_side({0.5, 0.2}, {-0.4, 0.2})};
    auto rep = gauss_bonnet_residual(ds, poly, 16);
    Real area = (std::sinh(0.5) - std::sinh(-0.4)) * 0.9;
    CHECK(rep.intK == Catch::Approx(area).margin(1e-5));
    CHECK(std::abs(rep.residual) < 1e-3);
  }
  SECTION("50 random polygons on the flat plane and the hyperboloid") {
    std::mt19937 rng(99);
    FlatLorentzChart flat;
    DeSitterChart ds;
    for (int i = 0; i < 50; ++i) {
      auto pf = random_polygon(flat, rng, {0, 0}, 0.4, 1.5);
      auto rf = gauss_bonnet_residual(flat, pf);
      CHECK(std::abs(rf.residual) < 1e-3);
      auto ph = random_polygon(ds, rng, {0.05, 0.6}, 0.2, 0.55);
      auto rh = gauss_bonnet_residual(ds, ph, 12);
      CHECK(std::abs(rh.residual) < 1e-3);
    }
  }
  SECTION("25 random polygons on the saddle patch") {
    auto surf = generate_surface(AxisKind::A2, preset_saddle_Q(0.2, 1.2, 501),
                                 uniform_grid(-0.9, 0.9, 65));
    RevolutionChart chart(surf);
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
      auto poly = random_polygon(chart, rng, {0.7, 0.0}, 0.1, 0.35);
      auto rep = gauss_bonnet_residual(chart, poly, 12);
      CHECK(std::abs(rep.residual) < 1e-3);
    }
  }
  SECTION("residual halves at least linearly under refinement") {
    DeSitterChart ds;
    std::mt19937 rng(5);
    Real coarse_total = 0, fine_total = 0;
    for (int i = 0; i < 5; ++i) {
      auto poly = random_polygon(ds, rng, {0.05, 0.6}, 0.2, 0.55, 300);
      auto rep_c = gauss_bonnet_residual(ds, poly, 6, 16);
      auto poly2 = poly;
      for (auto& s : poly2.sides) {
        Side refined = make_line_side(s.pts.front(), s.pts.back(), 2 * s.pts.size());
        s = refined;
      }
      auto rep_f = gauss_bonnet_residual(ds, poly2, 12, 32);
      coarse_total += std::abs(rep_c.residual);
      fine_total += std::abs(rep_f.residual);
    }
    CHECK((fine_total <= 0.5 * coarse_total + 1e-12 || fine_total < 1e-9));
  }
  SECTION("vanishing side reproduces the triangle limit") {
    FlatLorentzChart flat;
    auto run = [&](Real epsl) {
      NonNullPolygon poly;
      Vec2 a = {0, 0}, b = {1.4, 0.2}, c = {0.8, 1.9};
      Vec2 c2 = {0.8 + epsl, 1.9};
      poly.sides = {make_line_side(a, c2), make_line_side(c2, c), make_line_side(c, b),
                    make_line_side(b, a)};
      return gauss_bonnet_residual(flat, poly);
    };
    auto quad = run(1e-4);
    NonNullPolygon tri;
    tri.sides = {make_line_side({0, 0}, {0.8, 1.9}), make_line_side({0.8, 1.9}, {1.4, 0.2}),
                 make_line_side({1.4, 0.2}, {0, 0})};
    auto trirep = gauss_bonnet_residual(flat, tri);
    CHECK(quad.sumTheta == Catch::Approx(trirep.sumTheta).margin(1e-6));
    CHECK(std::abs(quad.residual - trirep.residual) < 1e-6);
  }
}
