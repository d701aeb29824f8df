#ifndef LW_HALFPLANE_HPP
#define LW_HALFPLANE_HPP

#include <stdexcept>

#include "lw/core.hpp"
#include "lw/minkowski.hpp"

// Conformal half-plane models of the fundamental-region quotients. Each
// model is a 2-manifold {(x,y) : sign_half * y > 0} with metric D / y^2 for
// a constant matrix D, realized inside L^3 as the plane through the rotation
// axis that the profile curves live in.
//
// Gaussian curvature note: the first three models have the familiar
// constant curvatures -1, +1, -1. The null-axis model -2 dx dy / y^2 is
// actually flat (substituting q = 1/y turns it into 2 dx dq), even though
// its ambient construction parallels the anti-de-Sitter cases; the curvature
// accessor reports the computed value, and the geodesic/elastica layers use
// it consistently.

namespace lw {

enum class ModelKind { AdS_A1, DeSitter_R, Hyperbolic_Q, AdS_A3 };
enum class HalfSign { Plus, Minus };

struct HalfPlaneModel {
  ModelKind kind = ModelKind::AdS_A1;
  HalfSign sign_half = HalfSign::Plus;

  Real half() const { return sign_half == HalfSign::Plus ? 1.0 : -1.0; }

  bool lorentzian() const { return kind != ModelKind::Hyperbolic_Q; }

  /// Constant matrix D with model metric D / y^2.
  Mat2 conformal_matrix() const {
    switch (kind) {
      case ModelKind::AdS_A1: return {{{-1, 0}, {0, 1}}};
      case ModelKind::DeSitter_R: return {{{1, 0}, {0, -1}}};
      case ModelKind::Hyperbolic_Q: return {{{1, 0}, {0, 1}}};
      default: return {{{0, -1}, {-1, 0}}};
    }
  }

  Mat2 metric(Real y) const {
    Mat2 d = conformal_matrix();
    Real w = 1.0 / (y * y);
    return {{{d[0][0] * w, d[0][1] * w}, {d[1][0] * w, d[1][1] * w}}};
  }

  Real dot(const Vec2& u, const Vec2& v, Real y) const {
    Mat2 g = metric(y);
    return u[0] * g[0][0] * v[0] + u[0] * g[0][1] * v[1] +
           u[1] * g[1][0] * v[0] + u[1] * g[1][1] * v[1];
  }

  /// Gaussian curvature of the model metric.
  Real gaussian_curvature() const {
    switch (kind) {
      case ModelKind::AdS_A1: return -1.0;
      case ModelKind::DeSitter_R: return 1.0;
      case ModelKind::Hyperbolic_Q: return -1.0;
      default: return 0.0;  // -2 dx dy / y^2 is flat
    }
  }

  bool inside(const Vec2& p, Real margin = 0.0) const {
    return half() * p[1] > margin;
  }

  /// Christoffel symbols Gamma[k][i][j] of the model metric at height y.
  std::array<Mat2, 2> christoffel(Real y) const {
    std::array<Mat2, 2> c{};
    switch (kind) {
      case ModelKind::AdS_A1:
      case ModelKind::DeSitter_R:
        // identical connection: the two metrics differ by an overall sign
        c[0][0][1] = c[0][1][0] = -1.0 / y;
        c[1][0][0] = -1.0 / y;
        c[1][1][1] = -1.0 / y;
        break;
      case ModelKind::Hyperbolic_Q:
        c[0][0][1] = c[0][1][0] = -1.0 / y;
        c[1][0][0] = 1.0 / y;
        c[1][1][1] = -1.0 / y;
        break;
      default:
        c[1][1][1] = -2.0 / y;
        break;
    }
    return c;
  }

  /// Unit normal of a (unit, non-null) tangent T at height y, oriented so
  /// that det[T, N] > 0 in model coordinates. Returns N and eps2 = g(N,N).
  void unit_normal(const Vec2& p, const Vec2& T, Vec2& N, Real& eps2) const {
    Mat2 g = metric(p[1]);
    Vec2 w = {g[0][0] * T[0] + g[0][1] * T[1], g[1][0] * T[0] + g[1][1] * T[1]};
    N = {-w[1], w[0]};
    Real nn = dot(N, N, p[1]);
    if (nn == 0) throw std::domain_error("unit_normal of a null tangent");
    Real inv = 1.0 / std::sqrt(std::abs(nn));
    N = {N[0] * inv, N[1] * inv};
    if (T[0] * N[1] - T[1] * N[0] < 0) N = {-N[0], -N[1]};
    eps2 = sgn(dot(N, N, p[1]));
  }

  AxisKind axis_kind() const {
    switch (kind) {
      case ModelKind::AdS_A1: return AxisKind::A1;
      case ModelKind::AdS_A3: return AxisKind::A3;
      default: return AxisKind::A2;
    }
  }

  Chart chart() const { return Chart::of_axis(axis_kind()); }

  /// Embeds a model point into the containing plane of L^3.
  /// AdS_A1, Hyperbolic_Q, AdS_A3 live in {z = 0}; DeSitter_R in {y = 0}
  /// with the model's second coordinate along z.
  Vec3 embed(const Vec2& p) const {
    if (kind == ModelKind::DeSitter_R) return {p[0], 0.0, p[1]};
    return {p[0], p[1], 0.0};
  }

  const char* name() const {
    switch (kind) {
      case ModelKind::AdS_A1: return "ads-a1";
      case ModelKind::DeSitter_R: return "ds-r";
      case ModelKind::Hyperbolic_Q: return "hyp-q";
      default: return "ads-a3";
    }
  }
};

}  // namespace lw

#endif  // LW_HALFPLANE_HPP
