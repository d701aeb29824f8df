#ifndef LW_MINKOWSKI_HPP
#define LW_MINKOWSKI_HPP

#include <optional>
#include <stdexcept>

#include "lw/core.hpp"

// Lorentz-Minkowski 3-space kernel: chart-tagged vectors, the flat metric,
// causal classification, the three one-parameter rotation groups and their
// orbits and fundamental regions.

namespace lw {

enum class ChartKind { Orthonormal, NullBasis };

enum class AxisKind { A1, A2, A3 };

/// Coordinate chart of L^3. The metric matrix travels with the data:
/// A1 uses diag(-1,+1,+1) (axis x time-like), A2 uses diag(+1,+1,-1)
/// (axis x space-like, z time-like), A3 uses the null-basis metric
/// g = -2 dx dy + dz^2.
struct Chart {
  ChartKind kind;
  Mat3 g;

  static Chart a1() {
    return {ChartKind::Orthonormal,
            {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  }
  static Chart a2() {
    return {ChartKind::Orthonormal,
            {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}};
  }
  static Chart null_basis() {
    return {ChartKind::NullBasis,
            {{{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}}};
  }
  static Chart of_axis(AxisKind k) {
    switch (k) {
      case AxisKind::A1: return a1();
      case AxisKind::A2: return a2();
      default: return null_basis();
    }
  }

  friend bool operator==(const Chart& a, const Chart& b) {
    if (a.kind != b.kind) return false;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a.g[i][j] != b.g[i][j]) return false;
    return true;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }
};

struct MVec3 {
  Vec3 v;
  Chart chart;
};

enum class CausalCharacter { SpaceLike, TimeLike, LightLike };

inline void require_same_chart(const MVec3& a, const MVec3& b) {
  if (a.chart != b.chart)
    throw std::invalid_argument("lorentz product of vectors in different charts");
}

inline Real lorentz_dot(const Vec3& u, const Vec3& v, const Chart& c) {
  Real s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * c.g[i][j] * v[j];
  return s;
}

inline Real lorentz_dot(const MVec3& u, const MVec3& v) {
  require_same_chart(u, v);
  return lorentz_dot(u.v, v.v, u.chart);
}

inline constexpr Real kCausalTolDefault = 1e-9;

/// Causal classification with a relative tolerance: |<v,v>| below
/// tau * |v|^2_euclid counts as light-like.
inline CausalCharacter causal_character(const MVec3& v, Real tau_causal = kCausalTolDefault) {
  Real n2 = euclid_norm2(v.v);
  if (n2 == 0) throw std::invalid_argument("causal_character of the zero vector");
  Real q = lorentz_dot(v, v);
  if (std::abs(q) <= tau_causal * n2) return CausalCharacter::LightLike;
  return q > 0 ? CausalCharacter::SpaceLike : CausalCharacter::TimeLike;
}

/// Metric cross product: the unique w with <w,a> = det(u,v,a) for all a.
/// In matrix terms G w = u x v (Euclidean cross), so w = G^{-1} (u x v).
inline MVec3 lorentz_cross(const MVec3& u, const MVec3& v) {
  require_same_chart(u, v);
  Vec3 e = {u.v[1] * v.v[2] - u.v[2] * v.v[1],
            u.v[2] * v.v[0] - u.v[0] * v.v[2],
            u.v[0] * v.v[1] - u.v[1] * v.v[0]};
  const Mat3& g = u.chart.g;
  Vec3 w{};
  if (u.chart.kind == ChartKind::Orthonormal) {
    // diagonal metric, signs +-1
    for (int i = 0; i < 3; ++i) w[i] = e[i] / g[i][i];
  } else {
    // null basis: g = [[0,-1,0],[-1,0,0],[0,0,1]], self-inverse
    w = {-e[1], -e[0], e[2]};
  }
  return {w, u.chart};
}

struct Isometry3 {
  Mat3 m;
  Chart chart;

  /// M^T G M must equal G within tol.
  Real isometry_defect() const {
    Mat3 mt = mat3_transpose(m);
    Mat3 r = mat3_mul(mat3_mul(mt, chart.g), m);
    Real d = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(r[i][j] - chart.g[i][j]));
    return d;
  }

  MVec3 apply(const MVec3& p) const {
    if (p.chart != chart) throw std::invalid_argument("isometry applied across charts");
    return {mat3_apply(m, p.v), chart};
  }
};

/// One-parameter rotation groups about the axis <x>:
/// A1 elliptic motions mu_t, A2 hyperbolic motions xi_t, A3 parabolic
/// motions sigma_t, each in its matching chart.
inline Isometry3 rotation(AxisKind kind, Real t) {
  switch (kind) {
    case AxisKind::A1: {
      Real c = std::cos(t), s = std::sin(t);
      return {{{{1, 0, 0}, {0, c, -s}, {0, s, c}}}, Chart::a1()};
    }
    case AxisKind::A2: {
      Real c = std::cosh(t), s = std::sinh(t);
      return {{{{1, 0, 0}, {0, c, s}, {0, s, c}}}, Chart::a2()};
    }
    default: {
      return {{{{1, 0.5 * t * t, t}, {0, 1, 0}, {0, t, 1}}}, Chart::null_basis()};
    }
  }
}

/// d/dt rotation(kind,t) at t=0.
inline Mat3 rotation_generator(AxisKind kind) {
  switch (kind) {
    case AxisKind::A1: return {{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}};
    case AxisKind::A2: return {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
    default: return {{{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}};
  }
}

enum class RegionLabel {
  // A2 (space-like axis)
  RPlus, RMinus, QPlus, QMinus, DegeneratePlane,
  // A3 (light-like axis)
  SPlus, SMinus, TPlane,
  // A1 (time-like axis)
  Exterior,
  // common
  Axis,
};

inline const char* region_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::RPlus: return "R+";
    case RegionLabel::RMinus: return "R-";
    case RegionLabel::QPlus: return "Q+";
    case RegionLabel::QMinus: return "Q-";
    case RegionLabel::DegeneratePlane: return "degenerate-plane";
    case RegionLabel::SPlus: return "S+";
    case RegionLabel::SMinus: return "S-";
    case RegionLabel::TPlane: return "T-plane";
    case RegionLabel::Exterior: return "exterior";
    default: return "axis";
  }
}

/// Fundamental region of p relative to the rotation axis <x>.
inline RegionLabel fundamental_region(const MVec3& p, AxisKind kind, Real tau = 1e-12) {
  Real y = p.v[1], z = p.v[2];
  switch (kind) {
    case AxisKind::A1:
      return (y * y + z * z > tau) ? RegionLabel::Exterior : RegionLabel::Axis;
    case AxisKind::A2: {
      if (std::abs(y) <= tau && std::abs(z) <= tau) return RegionLabel::Axis;
      Real q = z * z - y * y;
      if (std::abs(q) <= tau) return RegionLabel::DegeneratePlane;
      if (q > 0) return z > 0 ? RegionLabel::RPlus : RegionLabel::RMinus;
      return y > 0 ? RegionLabel::QPlus : RegionLabel::QMinus;
    }
    default: {
      if (std::abs(y) <= tau && std::abs(z) <= tau) return RegionLabel::Axis;
      if (std::abs(y) <= tau) return RegionLabel::TPlane;
      return y > 0 ? RegionLabel::SPlus : RegionLabel::SMinus;
    }
  }
}

enum class OrbitType { Point, Circle, HyperbolaBranch, HalfLine, Parabola, Line };

/// Orbit of p under the rotation group, per the case analysis of the three
/// axis kinds. `center` is the axis point the orbit is organized around;
/// `invariant` is radius^2 (A1), y^2 - z^2 (A2) or the plane offset y (A3).
struct OrbitDescriptor {
  OrbitType type;
  Vec3 center{};
  Real invariant = 0;
};

inline OrbitDescriptor orbit_descriptor(const MVec3& p, AxisKind kind, Real tau = 1e-12) {
  Real a1 = p.v[0], a2 = p.v[1], a3 = p.v[2];
  Vec3 c = {a1, 0, 0};
  switch (kind) {
    case AxisKind::A1: {
      Real r2 = a2 * a2 + a3 * a3;
      if (r2 <= tau) return {OrbitType::Point, c, 0};
      return {OrbitType::Circle, c, r2};
    }
    case AxisKind::A2: {
      if (a2 * a2 + a3 * a3 <= tau) return {OrbitType::Point, c, 0};
      Real q = a2 * a2 - a3 * a3;
      if (std::abs(q) <= tau) return {OrbitType::HalfLine, c, 0};
      return {OrbitType::HyperbolaBranch, c, q};
    }
    default: {
      if (std::abs(a2) <= tau && std::abs(a3) <= tau) return {OrbitType::Point, c, 0};
      if (std::abs(a2) <= tau) return {OrbitType::Line, {0, 0, a3}, a3};
      return {OrbitType::Parabola, c, a2};
    }
  }
}

}  // namespace lw

#endif  // LW_MINKOWSKI_HPP
