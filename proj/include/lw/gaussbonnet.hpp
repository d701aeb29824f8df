#ifndef LW_GAUSSBONNET_HPP
#define LW_GAUSSBONNET_HPP

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "lw/core.hpp"
#include "lw/minkowski.hpp"

// Hyperbolic-angle calculus on Lorentzian surface charts, geodesic curvature
// integration, parallel transport, and the Gauss-Bonnet identity
//
//       -int_K K dA + oint kappa ds + sum_j theta_j = 0
//
// for non-null polygons.
//
// Conventions. Angles live in a per-point orthonormal frame {e1 space-like,
// e2 time-like future}. The perp of a unit vector with frame components
// (a,b) is -sgn(g(v,v)) * (b,a): the unique convention under which the Euler
// relation phi' = -kappa holds for both causal types of curve. With it, the
// polygon identity above closes when the boundary is traversed clockwise
// with respect to the (coordinate-1, coordinate-2) order of the chart; all
// polygon builders here follow that traversal.

namespace lw {

class SurfaceChart {
 public:
  virtual ~SurfaceChart() = default;
  virtual Mat2 metric(const Vec2& p) const = 0;
  virtual std::array<Mat2, 2> metric_derivs(const Vec2& p) const = 0;
  virtual Real gauss_curvature(const Vec2& p) const = 0;

  Real dot(const Vec2& u, const Vec2& v, const Vec2& p) const {
    Mat2 g = metric(p);
    return u[0] * g[0][0] * v[0] + u[0] * g[0][1] * v[1] +
           u[1] * g[1][0] * v[0] + u[1] * g[1][1] * v[1];
  }

  Real det_metric(const Vec2& p) const {
    Mat2 g = metric(p);
    return g[0][0] * g[1][1] - g[0][1] * g[1][0];
  }

  bool lorentzian(const Vec2& p) const { return det_metric(p) < 0; }

  Real area_element(const Vec2& p) const { return std::sqrt(std::abs(det_metric(p))); }

  std::array<Mat2, 2> christoffel(const Vec2& p) const {
    Mat2 g = metric(p);
    auto dg = metric_derivs(p);
    Real det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    Mat2 gi = {{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
    std::array<Mat2, 2> c{};
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Real s = 0;
          for (int l = 0; l < 2; ++l)
            s += gi[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
          c[k][i][j] = 0.5 * s;
        }
    return c;
  }

  /// Orthonormal frame at p. Lorentzian chart: {e1 space-like, e2 time-like
  /// future}; Riemannian chart: both space-like. Positively oriented.
  void frame(const Vec2& p, Vec2& e1, Vec2& e2) const {
    Mat2 g = metric(p);
    if (std::abs(g[0][0]) < 1e-14)
      throw std::domain_error("SurfaceChart::frame: degenerate coordinate direction");
    Vec2 r = {-g[0][1] / g[0][0], 1.0};
    Real qr = dot(r, r, p);
    if (g[0][0] > 0) {
      e1 = {1.0 / std::sqrt(g[0][0]), 0.0};
      e2 = {r[0] / std::sqrt(std::abs(qr)), r[1] / std::sqrt(std::abs(qr))};
    } else {
      e2 = {1.0 / std::sqrt(-g[0][0]), 0.0};
      e1 = {r[0] / std::sqrt(std::abs(qr)), r[1] / std::sqrt(std::abs(qr))};
    }
    if (e1[0] * e2[1] - e1[1] * e2[0] < 0) e1 = {-e1[0], -e1[1]};
  }

  /// Components of a coordinate vector in the frame at p.
  Vec2 to_frame(const Vec2& p, const Vec2& v) const {
    Vec2 e1, e2;
    frame(p, e1, e2);
    Real det = e1[0] * e2[1] - e1[1] * e2[0];
    return {(v[0] * e2[1] - v[1] * e2[0]) / det, (e1[0] * v[1] - e1[1] * v[0]) / det};
  }

  Vec2 from_frame(const Vec2& p, const Vec2& c) const {
    Vec2 e1, e2;
    frame(p, e1, e2);
    return {c[0] * e1[0] + c[1] * e2[0], c[0] * e1[1] + c[1] * e2[1]};
  }
};

/// Flat Lorentzian plane, metric dy^2 - dz^2 in coordinates (y, z).
class FlatLorentzChart final : public SurfaceChart {
 public:
  Mat2 metric(const Vec2&) const override { return {{{1, 0}, {0, -1}}}; }
  std::array<Mat2, 2> metric_derivs(const Vec2&) const override { return {}; }
  Real gauss_curvature(const Vec2&) const override { return 0; }
};

/// Unit one-sheet hyperboloid x^2+y^2-z^2 = 1 in proper coordinates (u, t):
/// X = (cosh u cos t, cosh u sin t, sinh u), induced metric
/// -du^2 + cosh^2 u dt^2, K = +1 (a de Sitter surface).
class DeSitterChart final : public SurfaceChart {
 public:
  Mat2 metric(const Vec2& p) const override {
    Real c = std::cosh(p[0]);
    return {{{-1, 0}, {0, c * c}}};
  }
  std::array<Mat2, 2> metric_derivs(const Vec2& p) const override {
    std::array<Mat2, 2> d{};
    d[0][1][1] = 2.0 * std::cosh(p[0]) * std::sinh(p[0]);
    return d;
  }
  Real gauss_curvature(const Vec2&) const override { return 1; }

  static Vec3 embed(const Vec2& p) {
    return {std::cosh(p[0]) * std::cos(p[1]), std::cosh(p[0]) * std::sin(p[1]),
            std::sinh(p[0])};
  }
};

/// Upper sheet of z^2-x^2-y^2 = 1 (a hyperbolic plane), coordinates (u, t):
/// X = (sinh u, cosh u sin t?, ...) via the A2 orbit sweep; induced metric
/// du^2 + cosh^2 u dt^2, K = -1. Riemannian.
class TwoSheetChart final : public SurfaceChart {
 public:
  Mat2 metric(const Vec2& p) const override {
    Real c = std::cosh(p[0]);
    return {{{1, 0}, {0, c * c}}};
  }
  std::array<Mat2, 2> metric_derivs(const Vec2& p) const override {
    std::array<Mat2, 2> d{};
    d[0][1][1] = 2.0 * std::cosh(p[0]) * std::sinh(p[0]);
    return d;
  }
  Real gauss_curvature(const Vec2&) const override { return -1; }
};

enum class TimeOrientation { Future, Past, NA };

struct OrientedTangent {
  Vec2 point;
  Vec2 comps;  // coordinate-basis components
  CausalCharacter causal = CausalCharacter::SpaceLike;
  TimeOrientation time_orientation = TimeOrientation::NA;
};

inline OrientedTangent classify_tangent(const SurfaceChart& chart, const Vec2& p,
                                        const Vec2& v) {
  OrientedTangent t;
  t.point = p;
  t.comps = v;
  Real q = chart.dot(v, v, p);
  Real n2 = v[0] * v[0] + v[1] * v[1];
  if (std::abs(q) <= 1e-12 * n2) {
    t.causal = CausalCharacter::LightLike;
    return t;
  }
  t.causal = q > 0 ? CausalCharacter::SpaceLike : CausalCharacter::TimeLike;
  if (t.causal == CausalCharacter::TimeLike) {
    Vec2 f = chart.to_frame(p, v);
    t.time_orientation = f[1] > 0 ? TimeOrientation::Future : TimeOrientation::Past;
  }
  return t;
}

/// v-perp. Lorentzian charts: -sgn(g(v,v)) times the frame component swap
/// (time-like inputs map to the future-preserving swap, space-like ones to
/// its negative), so that perp(perp(v)) = -v and the Euler relation holds;
/// Riemannian charts: the quarter rotation (a,b) -> (b,-a), which pairs with
/// the clockwise boundary traversal. Either way g(v, perp v) = 0 and perp
/// preserves unit length.
inline Vec2 perp(const SurfaceChart& chart, const Vec2& p, const Vec2& v) {
  Vec2 f = chart.to_frame(p, v);
  if (chart.lorentzian(p)) {
    Real s = -sgn(f[0] * f[0] - f[1] * f[1]);
    return chart.from_frame(p, {s * f[1], s * f[0]});
  }
  return chart.from_frame(p, {f[1], -f[0]});
}

namespace detail {

inline Real frame_gdot(const Vec2& u, const Vec2& v) { return u[0] * v[0] - u[1] * v[1]; }

inline Vec2 frame_perp(const Vec2& v) {
  Real s = -sgn(frame_gdot(v, v));
  return {s * v[1], s * v[0]};
}

/// Hyperbolic angle between unit frame vectors, with the case reductions
/// (past flip, space-like pair via perps, mixed pair via one perp).
inline Real frame_angle(Vec2 u, Vec2 v) {
  Real qu = frame_gdot(u, u), qv = frame_gdot(v, v);
  if (!std::isfinite(qu) || !std::isfinite(qv))
    throw std::invalid_argument("hyperbolic_angle: non-finite input");
  const Real tol = 1e-12;
  if (std::abs(qu) < tol || std::abs(qv) < tol)
    throw std::domain_error("hyperbolic_angle: null vector");
  bool ut = qu < 0, vt = qv < 0;
  if (ut && vt) {
    if ((u[1] > 0) != (v[1] > 0)) v = {-v[0], -v[1]};
    return std::asinh(v[0] * u[1] - v[1] * u[0]);
  }
  if (!ut && !vt) return frame_angle(frame_perp(u), frame_perp(v));
  if (ut && !vt) return frame_angle(u, frame_perp(v));
  return frame_angle(frame_perp(u), v);
}

}  // namespace detail

/// Hyperbolic angle from u to v (unit, non-null tangents at p).
inline Real hyperbolic_angle(const SurfaceChart& chart, const Vec2& p, const Vec2& u,
                             const Vec2& v) {
  return detail::frame_angle(chart.to_frame(p, u), chart.to_frame(p, v));
}

/// Ordinary signed exterior angle for Riemannian charts.
inline Real euclidean_angle(const SurfaceChart& chart, const Vec2& p, const Vec2& u,
                            const Vec2& v) {
  Vec2 a = chart.to_frame(p, u), b = chart.to_frame(p, v);
  return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
}

/// One smooth boundary piece, sampled uniformly in an internal parameter.
/// Tangents are d(point)/d(parameter); when absent they are recovered by
/// central differences of the samples.
struct Side {
  std::vector<Vec2> pts;
  std::vector<Vec2> tans;

  void ensure_tangents() {
    if (!tans.empty() || pts.size() < 2) return;
    std::size_t n = pts.size();
    tans.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = i == 0 ? 0 : i - 1;
      std::size_t b = i + 1 == n ? n - 1 : i + 1;
      Real w = static_cast<Real>(b - a);
      tans[i] = {(pts[b][0] - pts[a][0]) * static_cast<Real>(n - 1) / w,
                 (pts[b][1] - pts[a][1]) * static_cast<Real>(n - 1) / w};
    }
  }
};

inline Side make_line_side(const Vec2& a, const Vec2& b, std::size_t n = 512) {
  Side s;
  s.pts.reserve(n);
  s.tans.assign(n, {b[0] - a[0], b[1] - a[1]});
  for (std::size_t i = 0; i < n; ++i) {
    Real t = static_cast<Real>(i) / static_cast<Real>(n - 1);
    s.pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
  }
  return s;
}

/// RK4 geodesic shot from p with initial velocity v, affine length `len`.
inline Side make_geodesic_side(const SurfaceChart& chart, Vec2 p, Vec2 v, Real len,
                               std::size_t n = 1024) {
  Side s;
  s.pts.reserve(n);
  s.tans.reserve(n);
  Real h = len / static_cast<Real>(n - 1);
  auto acc = [&chart](const Vec2& q, const Vec2& w) -> Vec2 {
    auto gam = chart.christoffel(q);
    Vec2 a{};
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a[k] -= gam[k][i][j] * w[i] * w[j];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    s.pts.push_back(p);
    s.tans.push_back({v[0] * len, v[1] * len});  // d/d(unit parameter)
    if (i + 1 == n) break;
    Vec2 k1p = v, k1v = acc(p, v);
    Vec2 p2 = {p[0] + 0.5 * h * k1p[0], p[1] + 0.5 * h * k1p[1]};
    Vec2 v2 = {v[0] + 0.5 * h * k1v[0], v[1] + 0.5 * h * k1v[1]};
    Vec2 k2p = v2, k2v = acc(p2, v2);
    Vec2 p3 = {p[0] + 0.5 * h * k2p[0], p[1] + 0.5 * h * k2p[1]};
    Vec2 v3 = {v[0] + 0.5 * h * k2v[0], v[1] + 0.5 * h * k2v[1]};
    Vec2 k3p = v3, k3v = acc(p3, v3);
    Vec2 p4 = {p[0] + h * k3p[0], p[1] + h * k3p[1]};
    Vec2 v4 = {v[0] + h * k3v[0], v[1] + h * k3v[1]};
    Vec2 k4p = v4, k4v = acc(p4, v4);
    for (int c = 0; c < 2; ++c) {
      p[c] += h / 6.0 * (k1p[c] + 2 * k2p[c] + 2 * k3p[c] + k4p[c]);
      v[c] += h / 6.0 * (k1v[c] + 2 * k2v[c] + 2 * k3v[c] + k4v[c]);
    }
  }
  return s;
}

/// Causal character of a side; throws if it changes sign along the side.
inline CausalCharacter side_causal_character(const SurfaceChart& chart, Side& side) {
  side.ensure_tangents();
  int sign = 0;
  for (std::size_t i = 0; i < side.pts.size(); ++i) {
    Real q = chart.dot(side.tans[i], side.tans[i], side.pts[i]);
    int s = q > 0 ? 1 : (q < 0 ? -1 : 0);
    if (s == 0) throw std::domain_error("side has a null tangent");
    if (sign == 0) sign = s;
    if (s != sign) throw std::domain_error("side changes causal character");
  }
  return sign > 0 ? CausalCharacter::SpaceLike : CausalCharacter::TimeLike;
}

struct NonNullPolygon {
  std::vector<Side> sides;

  void validate(const SurfaceChart& chart, Real closure_tol = 1e-9) {
    if (sides.size() < 2) throw std::invalid_argument("polygon needs >= 2 sides");
    for (std::size_t j = 0; j < sides.size(); ++j) {
      side_causal_character(chart, sides[j]);
      const Vec2& e = sides[j].pts.back();
      const Vec2& b = sides[(j + 1) % sides.size()].pts.front();
      if (std::hypot(e[0] - b[0], e[1] - b[1]) > closure_tol)
        throw std::invalid_argument("polygon is not closed");
    }
  }
};

namespace detail {

inline Vec2 unit_tangent(const SurfaceChart& chart, const Side& side, std::size_t i) {
  Real q = chart.dot(side.tans[i], side.tans[i], side.pts[i]);
  Real inv = 1.0 / std::sqrt(std::abs(q));
  return {side.tans[i][0] * inv, side.tans[i][1] * inv};
}

}  // namespace detail

/// Geodesic curvature kappa(s) sampled along a side, from the Frenet
/// relation: kappa = g(nabla_T T, T-perp) with unit T and the frame perp.
inline std::vector<Real> geodesic_curvature_samples(const SurfaceChart& chart, Side& side) {
  side.ensure_tangents();
  std::size_t n = side.pts.size();
  std::vector<Vec2> that(n);
  std::vector<Real> speed(n);
  for (std::size_t i = 0; i < n; ++i) {
    Real q = chart.dot(side.tans[i], side.tans[i], side.pts[i]);
    speed[i] = std::sqrt(std::abs(q));
    that[i] = {side.tans[i][0] / speed[i], side.tans[i][1] / speed[i]};
  }
  Real h = 1.0 / static_cast<Real>(n - 1);
  std::vector<Real> kappa(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 dT;
    if (i == 0)
      dT = {(-3 * that[0][0] + 4 * that[1][0] - that[2][0]) / (2 * h),
            (-3 * that[0][1] + 4 * that[1][1] - that[2][1]) / (2 * h)};
    else if (i + 1 == n)
      dT = {(3 * that[n - 1][0] - 4 * that[n - 2][0] + that[n - 3][0]) / (2 * h),
            (3 * that[n - 1][1] - 4 * that[n - 2][1] + that[n - 3][1]) / (2 * h)};
    else
      dT = {(that[i + 1][0] - that[i - 1][0]) / (2 * h),
            (that[i + 1][1] - that[i - 1][1]) / (2 * h)};
    auto gam = chart.christoffel(side.pts[i]);
    Vec2 cov;
    for (int k = 0; k < 2; ++k) {
      Real g2 = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g2 += gam[k][a][b] * that[i][a] * that[i][b];
      cov[k] = dT[k] / speed[i] + g2;
    }
    Vec2 tperp = perp(chart, side.pts[i], that[i]);
    kappa[i] = chart.dot(cov, tperp, side.pts[i]);
  }
  return kappa;
}

/// Trapezoidal integral of the geodesic curvature over a non-null side.
inline Real geodesic_curvature_integral(const SurfaceChart& chart, Side& side) {
  side_causal_character(chart, side);  // rejects null pieces
  std::vector<Real> kappa = geodesic_curvature_samples(chart, side);
  std::size_t n = side.pts.size();
  Real h = 1.0 / static_cast<Real>(n - 1);
  Real acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Real qa = chart.dot(side.tans[i], side.tans[i], side.pts[i]);
    Real qb = chart.dot(side.tans[i + 1], side.tans[i + 1], side.pts[i + 1]);
    acc += 0.5 * (kappa[i] * std::sqrt(std::abs(qa)) + kappa[i + 1] * std::sqrt(std::abs(qb))) * h;
  }
  return acc;
}

/// RK4 parallel transport of Z0 along a side; returns Z at every sample.
inline std::vector<Vec2> parallel_transport(const SurfaceChart& chart, Side& side, Vec2 z0) {
  side.ensure_tangents();
  std::size_t n = side.pts.size();
  Real h = 1.0 / static_cast<Real>(n - 1);
  std::vector<Vec2> out;
  out.reserve(n);
  out.push_back(z0);
  auto rhs = [&chart](const Vec2& p, const Vec2& t, const Vec2& z) -> Vec2 {
    auto gam = chart.christoffel(p);
    Vec2 d{};
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d[k] -= gam[k][i][j] * t[i] * z[j];
    return d;
  };
  Vec2 z = z0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec2 pm = {0.5 * (side.pts[i][0] + side.pts[i + 1][0]),
               0.5 * (side.pts[i][1] + side.pts[i + 1][1])};
    Vec2 tm = {0.5 * (side.tans[i][0] + side.tans[i + 1][0]),
               0.5 * (side.tans[i][1] + side.tans[i + 1][1])};
    Vec2 k1 = rhs(side.pts[i], side.tans[i], z);
    Vec2 z2 = {z[0] + 0.5 * h * k1[0], z[1] + 0.5 * h * k1[1]};
    Vec2 k2 = rhs(pm, tm, z2);
    Vec2 z3 = {z[0] + 0.5 * h * k2[0], z[1] + 0.5 * h * k2[1]};
    Vec2 k3 = rhs(pm, tm, z3);
    Vec2 z4 = {z[0] + h * k3[0], z[1] + h * k3[1]};
    Vec2 k4 = rhs(side.pts[i + 1], side.tans[i + 1], z4);
    for (int c = 0; c < 2; ++c) z[c] += h / 6.0 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
    out.push_back(z);
  }
  return out;
}

struct EulerCheck {
  Real max_defect = 0;
  std::size_t skipped = 0;
};

/// Checks the Euler relation phi'(s) = -kappa(s) with phi the hyperbolic
/// angle between the unit tangent and a parallel time-like field.
inline EulerCheck euler_angle_check(const SurfaceChart& chart, Side& side, Vec2 z0) {
  side.ensure_tangents();
  std::vector<Vec2> z = parallel_transport(chart, side, z0);
  std::vector<Real> kappa = geodesic_curvature_samples(chart, side);
  std::size_t n = side.pts.size();
  std::vector<Real> phi(n);
  std::vector<bool> ok(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      Vec2 that = detail::unit_tangent(chart, side, i);
      Real qz = chart.dot(z[i], z[i], side.pts[i]);
      Vec2 zu = {z[i][0] / std::sqrt(std::abs(qz)), z[i][1] / std::sqrt(std::abs(qz))};
      phi[i] = hyperbolic_angle(chart, side.pts[i], that, zu);
    } catch (const std::domain_error&) {
      ok[i] = false;
    }
  }
  EulerCheck out;
  Real h = 1.0 / static_cast<Real>(n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!ok[i - 1] || !ok[i] || !ok[i + 1]) {
      ++out.skipped;
      continue;
    }
    Real qa = chart.dot(side.tans[i], side.tans[i], side.pts[i]);
    Real dsdt = std::sqrt(std::abs(qa));
    Real dphi = (phi[i + 1] - phi[i - 1]) / (2 * h) / dsdt;
    out.max_defect = std::max(out.max_defect, std::abs(dphi + kappa[i]));
  }
  return out;
}

struct GaussBonnetReport {
  Real intK = 0;
  Real intKappa = 0;
  Real sumTheta = 0;
  Real residual = 0;
  Real excluded_measure = 0;  // area skipped at degenerate cells
};

/// Random star-shaped polygon around `center` with straight non-null sides,
/// traversed clockwise. Rejection-samples until every side has constant
/// causal character.
template <class Rng>
NonNullPolygon random_non_null_polygon(const SurfaceChart& chart, Rng& rng, Vec2 center,
                                       Real rmin, Real rmax,
                                       std::size_t side_samples = 600) {
  std::uniform_int_distribution<int> nd(3, 7);
  std::uniform_real_distribution<Real> ad(0, 2 * kPi), rd(rmin, rmax);
  for (int attempt = 0; attempt < 500; ++attempt) {
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
  throw std::runtime_error("random_non_null_polygon: no admissible polygon found");
}

namespace detail {

/// Integral of K dA over the polygon interior: centroid fan over the
/// boundary polyline, edge-midpoint quadrature on subdivided triangles.
/// Light-like (degenerate-metric) spots are skipped and their measure
/// reported.
inline void polygon_curvature_integral(const SurfaceChart& chart,
                                       const std::vector<Vec2>& loop, int subdiv,
                                       Real& intK, Real& excluded) {
  Vec2 c = {0, 0};
  for (const auto& p : loop) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= static_cast<Real>(loop.size());
  c[1] /= static_cast<Real>(loop.size());
  intK = 0;
  excluded = 0;
  const Real tau_degenerate = 1e-10;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec2& a = loop[i];
    const Vec2& b = loop[(i + 1) % loop.size()];
    // subdivide triangle (c,a,b) into subdiv^2 congruent triangles
    int ns = subdiv;
    for (int r = 0; r < ns; ++r) {
      for (int q = 0; q < 2 * r + 1; ++q) {
        // barycentric corners of the small triangle
        Real i0 = static_cast<Real>(r), j0 = static_cast<Real>(q / 2);
        bool up = (q % 2 == 0);
        Real l0a, l0b, l1a, l1b, l2a, l2b;
        if (up) {
          l0a = i0, l0b = j0;
          l1a = i0 + 1, l1b = j0;
          l2a = i0 + 1, l2b = j0 + 1;
        } else {
          l0a = i0, l0b = j0;
          l1a = i0 + 1, l1b = j0 + 1;
          l2a = i0, l2b = j0 + 1;
        }
        auto bary = [&](Real ia, Real ja) -> Vec2 {
          Real u = ia / static_cast<Real>(ns);        // fraction along (a,b) band
          Real v = (u == 0) ? 0 : ja / ia;            // fraction across band
          // point = c + u*((1-v)*a + v*b - c)
          Real px = (1 - v) * a[0] + v * b[0];
          Real py = (1 - v) * a[1] + v * b[1];
          return {c[0] + u * (px - c[0]), c[1] + u * (py - c[1])};
        };
        Vec2 p0 = bary(l0a, l0b), p1 = bary(l1a, l1b), p2 = bary(l2a, l2b);
        Real coord_area = 0.5 * std::abs((p1[0] - p0[0]) * (p2[1] - p0[1]) -
                                         (p2[0] - p0[0]) * (p1[1] - p0[1]));
        if (coord_area == 0) continue;
        // edge-midpoint rule (exact through quadratics)
        Vec2 m01 = {0.5 * (p0[0] + p1[0]), 0.5 * (p0[1] + p1[1])};
        Vec2 m12 = {0.5 * (p1[0] + p2[0]), 0.5 * (p1[1] + p2[1])};
        Vec2 m20 = {0.5 * (p2[0] + p0[0]), 0.5 * (p2[1] + p0[1])};
        Real acc = 0, skipped = 0;
        for (const Vec2& mp : {m01, m12, m20}) {
          Real w = chart.area_element(mp);
          if (w < tau_degenerate)
            skipped += coord_area / 3.0;
          else
            acc += chart.gauss_curvature(mp) * w * coord_area / 3.0;
        }
        intK += acc;
        excluded += skipped;
      }
    }
  }
}

}  // namespace detail

namespace detail {

/// Boundary polyline for the area integral: each side contributes up to
/// `per_side` evenly spaced samples (straight sides only need their ends,
/// curved sides are approximated by a fine polyline).
inline std::vector<Vec2> area_loop(const NonNullPolygon& poly, std::size_t per_side) {
  std::vector<Vec2> loop;
  for (const auto& side : poly.sides) {
    std::size_t n = side.pts.size();
    std::size_t m = std::min(per_side, n - 1);
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t idx = k * (n - 1) / m;
      loop.push_back(side.pts[idx]);
    }
  }
  return loop;
}

}  // namespace detail

/// Gauss-Bonnet residual -intK + intKappa + sumTheta of a non-null polygon,
/// exterior angles theta_j = angle[u_j, t_{j+1}] in the traversal order.
/// The polygon must be traversed clockwise in chart coordinates.
inline GaussBonnetReport gauss_bonnet_residual(const SurfaceChart& chart,
                                               NonNullPolygon& poly, int subdiv = 12,
                                               std::size_t area_samples_per_side = 32) {
  poly.validate(chart);
  GaussBonnetReport rep;
  for (auto& side : poly.sides) rep.intKappa += geodesic_curvature_integral(chart, side);
  std::vector<Vec2> loop = detail::area_loop(poly, area_samples_per_side);
  std::size_t ns = poly.sides.size();
  for (std::size_t j = 0; j < ns; ++j) {
    Side& sj = poly.sides[j];
    Side& sk = poly.sides[(j + 1) % ns];
    Vec2 u = detail::unit_tangent(chart, sj, sj.pts.size() - 1);
    Vec2 t = detail::unit_tangent(chart, sk, 0);
    rep.sumTheta += hyperbolic_angle(chart, sj.pts.back(), u, t);
  }
  detail::polygon_curvature_integral(chart, loop, subdiv, rep.intK, rep.excluded_measure);
  rep.residual = -rep.intK + rep.intKappa + rep.sumTheta;
  return rep;
}

/// Euclidean (Riemannian-chart) version under the clockwise traversal:
/// residual = intK + intKappa + sumTheta + 2 pi, with ordinary signed
/// exterior angles.
inline GaussBonnetReport gauss_bonnet_residual_riemannian(const SurfaceChart& chart,
                                                          NonNullPolygon& poly,
                                                          int subdiv = 12,
                                                          std::size_t area_samples_per_side = 32) {
  GaussBonnetReport rep;
  for (auto& side : poly.sides) {
    side.ensure_tangents();
    rep.intKappa += geodesic_curvature_integral(chart, side);
  }
  std::vector<Vec2> loop = detail::area_loop(poly, area_samples_per_side);
  std::size_t ns = poly.sides.size();
  for (std::size_t j = 0; j < ns; ++j) {
    Side& sj = poly.sides[j];
    Side& sk = poly.sides[(j + 1) % ns];
    Vec2 u = detail::unit_tangent(chart, sj, sj.pts.size() - 1);
    Vec2 t = detail::unit_tangent(chart, sk, 0);
    rep.sumTheta += euclidean_angle(chart, sj.pts.back(), u, t);
  }
  detail::polygon_curvature_integral(chart, loop, subdiv, rep.intK, rep.excluded_measure);
  rep.residual = rep.intK + rep.intKappa + rep.sumTheta + 2 * kPi;
  return rep;
}

}  // namespace lw

#endif  // LW_GAUSSBONNET_HPP
