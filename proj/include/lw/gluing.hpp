#ifndef LW_GLUING_HPP
#define LW_GLUING_HPP

#include <functional>
#include <optional>
#include <string>

#include "lw/surface.hpp"

// The construction algorithm for A2-invariant Lorentzian surfaces that
// cross fundamental regions: from a seed function phi on (-delta^2, delta^2)
// build f_alpha(s) = phi(s^2), f_beta(s) = phi(-s^2), the profile curves
// alpha(s) = (f_alpha(s), 0, s) and beta(s) = (f_beta(s), s, 0), the four
// rotational pieces and the light-like patch joining them; the gluing
// function is F(y,z) = phi(z^2 - y^2). The Local Gluing Theorem check works
// on arbitrary (f_alpha, f_beta) pairs by probing the smoothness of F across
// the light cone.

namespace lw {

struct GluingSeed {
  std::function<Real(Real)> phi;  // defined on (-delta^2, delta^2)
  Real delta = 1;

  Real f_alpha(Real s) const { return phi(s * s); }
  Real f_beta(Real s) const { return phi(-s * s); }
};

/// F(y,z) = phi(z^2 - y^2) on the band |z^2 - y^2| < delta^2.
inline Real gluing_function(const GluingSeed& seed, Real y, Real z) {
  Real u = z * z - y * y;
  if (std::abs(u) >= seed.delta * seed.delta)
    throw std::domain_error("gluing_function: outside the band |z^2-y^2| < delta^2");
  return seed.phi(u);
}

/// The two branch formulas of the Local Gluing Theorem, assembled from an
/// (f_alpha, f_beta) pair rather than a seed.
inline Real gluing_function_branches(const std::function<Real(Real)>& f_alpha,
                                     const std::function<Real(Real)>& f_beta, Real y,
                                     Real z) {
  if (z * z >= y * y) return f_alpha(sgn(z) * std::sqrt(z * z - y * y));
  return f_beta(sgn(y) * std::sqrt(y * y - z * z));
}

struct LightLikePatch {
  Vec3 point;                 // the axis point (phi(0), 0, 0)
  std::array<bool, 4> rays;   // {y=z>0}, {y=z<0}, {y=-z>0}, {y=-z<0}
  bool include_point = true;
};

struct GluedSurface {
  GluingSeed seed;
  RotationalSurface alpha_plus, alpha_minus;  // R+ / R- pieces
  RotationalSurface beta_plus, beta_minus;    // Q+ / Q- pieces
  LightLikePatch patch;

  std::array<const RotationalSurface*, 4> pieces() const {
    return {&alpha_plus, &alpha_minus, &beta_plus, &beta_minus};
  }
};

namespace detail {

// The downstream Willmore residual double-differentiates H along the grid,
// so the graph jets need low-noise derivatives: fourth-order stencils at a
// step well above the rounding floor.
inline Real fd_d1(const std::function<Real(Real)>& f, Real s, Real h = 1e-3) {
  return (f(s - 2 * h) - 8 * f(s - h) + 8 * f(s + h) - f(s + 2 * h)) / (12 * h);
}
inline Real fd_d2(const std::function<Real(Real)>& f, Real s, Real h = 1e-3) {
  return (-f(s - 2 * h) + 16 * f(s - h) - 30 * f(s) + 16 * f(s + h) - f(s + 2 * h)) /
         (12 * h * h);
}

inline EmbeddedProfile graph_profile_R(const GluingSeed& seed, Real s0, Real s1,
                                       std::size_t n) {
  std::function<Real(Real)> fa = [&seed](Real s) { return seed.f_alpha(s); };
  return sample_profile(
      AxisKind::A2, [fa](Real s) -> Vec3 { return {fa(s), 0, s}; },
      [fa](Real s) -> Vec3 { return {fd_d1(fa, s), 0, 1}; },
      [fa](Real s) -> Vec3 { return {fd_d2(fa, s), 0, 0}; }, s0, s1, n);
}

inline EmbeddedProfile graph_profile_Q(const GluingSeed& seed, Real s0, Real s1,
                                       std::size_t n) {
  std::function<Real(Real)> fb = [&seed](Real s) { return seed.f_beta(s); };
  return sample_profile(
      AxisKind::A2, [fb](Real s) -> Vec3 { return {fb(s), s, 0}; },
      [fb](Real s) -> Vec3 { return {fd_d1(fb, s), 1, 0}; },
      [fb](Real s) -> Vec3 { return {fd_d2(fb, s), 0, 0}; }, s0, s1, n);
}

}  // namespace detail

/// Builds the four rotational pieces of the glued surface over
/// s in [s_gap, s_max] on each side of the axis crossing. Requires the
/// time-like graph condition (f_alpha')^2 < 1 on the alpha range.
inline GluedSurface build_glued_surface(const GluingSeed& seed, Real s_max,
                                        std::size_t ns, const std::vector<Real>& t_grid,
                                        Real s_gap = 0) {
  if (!(s_max > 0) || s_max >= seed.delta)
    throw std::invalid_argument("build_glued_surface: need 0 < s_max < delta");
  if (s_gap <= 0) s_gap = s_max / static_cast<Real>(ns);

  const Real h = 1e-5;
  for (std::size_t i = 0; i <= 64; ++i) {
    Real s = s_gap + (s_max - s_gap) * static_cast<Real>(i) / 64.0;
    for (Real sg : {s, -s}) {
      Real d = (seed.f_alpha(sg + h) - seed.f_alpha(sg - h)) / (2 * h);
      if (d * d >= 1.0)
        throw std::invalid_argument("build_glued_surface: profile not time-like ((f_alpha')^2 >= 1)");
    }
  }

  GluedSurface out;
  out.seed = seed;
  out.alpha_plus = generate_surface(AxisKind::A2,
                                    detail::graph_profile_R(seed, s_gap, s_max, ns), t_grid);
  out.alpha_minus = generate_surface(AxisKind::A2,
                                     detail::graph_profile_R(seed, -s_max, -s_gap, ns), t_grid);
  out.beta_plus = generate_surface(AxisKind::A2,
                                   detail::graph_profile_Q(seed, s_gap, s_max, ns), t_grid);
  out.beta_minus = generate_surface(AxisKind::A2,
                                    detail::graph_profile_Q(seed, -s_max, -s_gap, ns), t_grid);
  out.patch.point = {seed.phi(0.0), 0, 0};
  out.patch.rays = {true, true, true, true};
  return out;
}

struct GluingReport {
  Real value_gap = 0;       // |f_alpha(0) - f_beta(0)|
  Real fa_prime0 = 0;       // f_alpha'(0)
  Real fb_prime0 = 0;       // f_beta'(0)
  bool perpendicular = false;
  std::vector<Real> lg3_jumps;        // per derivative order 1..order
  std::vector<Real> lg3_consistency;  // step-halving agreement per order
  Real lg3_max_jump = 0;
  Real lorentzian_max_det = 0;  // max Gram determinant along patch rays (< 0 wanted)
  bool lorentzian_along_patch = false;
  bool passed = false;
};

namespace detail {

/// One-sided derivative of g at 0 from samples g(0), g(h), ..., order 1..3,
/// second-order stencils.
inline Real one_sided_deriv(const std::function<Real(Real)>& g, Real h, int order) {
  Real g0 = g(0), g1 = g(h), g2 = g(2 * h), g3 = g(3 * h), g4 = g(4 * h);
  switch (order) {
    case 1: return (-3 * g0 + 4 * g1 - g2) / (2 * h);
    case 2: return (2 * g0 - 5 * g1 + 4 * g2 - g3) / (h * h);
    case 3: return (-5 * g0 + 18 * g1 - 24 * g2 + 14 * g3 - 3 * g4) / (2 * h * h * h);
    default: throw std::invalid_argument("one_sided_deriv: order must be 1..3");
  }
}

/// Signed cross-cone derivative jump D+[g_plus] - (-1)^n D+[g_minus]. For a
/// smooth gluing function the even-power truncation errors of the two
/// one-sided stencils cancel and only odd powers h^3, h^5, ... survive.
inline Real signed_jump(const std::function<Real(Real)>& gp,
                        const std::function<Real(Real)>& gm, Real h, int n) {
  Real parity = (n % 2 == 0) ? 1.0 : -1.0;
  return one_sided_deriv(gp, h, n) - parity * one_sided_deriv(gm, h, n);
}

/// Richardson extrapolation of the signed jump over steps h0, h0/2, h0/4,
/// eliminating the h^3 and h^5 bias terms. A genuine derivative jump is an
/// h-independent offset and passes through unchanged.
inline Real jump_extrapolated(const std::function<Real(Real)>& gp,
                              const std::function<Real(Real)>& gm, Real h0, int n,
                              Real* consistency = nullptr) {
  Real j0 = signed_jump(gp, gm, h0, n);
  Real j1 = signed_jump(gp, gm, 0.5 * h0, n);
  Real j2 = signed_jump(gp, gm, 0.25 * h0, n);
  Real a0 = (8 * j1 - j0) / 7.0;
  Real a1 = (8 * j2 - j1) / 7.0;
  Real out = (32 * a1 - a0) / 31.0;
  if (consistency) *consistency = std::abs(out - a1);
  return out;
}

}  // namespace detail

/// Local Gluing Theorem check on an (f_alpha, f_beta) pair: value match and
/// perpendicularity at the axis (f'(0) = 0 both), cross-cone smoothness of
/// the gluing function to the requested derivative order along the crossing
/// curves t -> F(a - t/4a, +-(a + t/4a)), and the Lorentzian
/// character of the tangent plane along the patch rays.
inline GluingReport check_local_gluing(const std::function<Real(Real)>& f_alpha,
                                       const std::function<Real(Real)>& f_beta,
                                       Real delta, int order = 3, Real tol = 1e-8) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("check_local_gluing: order must be 1..3");
  GluingReport rep;
  rep.value_gap = std::abs(f_alpha(0) - f_beta(0));

  const Real hd = 1e-5 * delta;
  auto d1 = [&](const std::function<Real(Real)>& f) {
    Real c1 = (f(hd) - f(-hd)) / (2 * hd);
    Real c2 = (f(hd / 2) - f(-hd / 2)) / hd;
    return (4 * c2 - c1) / 3.0;  // Richardson
  };
  rep.fa_prime0 = d1(f_alpha);
  rep.fb_prime0 = d1(f_beta);
  rep.perpendicular = std::abs(rep.fa_prime0) < 1e-6 && std::abs(rep.fb_prime0) < 1e-6;

  if (rep.value_gap > tol) {
    rep.passed = false;
    return rep;
  }

  // cross-cone jumps of the crossing-curve derivatives
  rep.lg3_jumps.assign(order, 0.0);
  rep.lg3_consistency.assign(order, 0.0);
  const Real d2 = delta * delta;
  for (Real a : {0.25 * delta, 0.5 * delta, -0.25 * delta, -0.5 * delta}) {
    for (int zsign : {+1, -1}) {
      // F along the crossing curve t -> (a - t/4a, zsign*(a + t/4a)), where
      // z^2 - y^2 = t exactly: f_alpha side for t >= 0, f_beta side for
      // t <= 0. The minus side is sampled as the reflection G(-h), handled
      // by the parity factor inside the jump estimator.
      auto g_plus = [&](Real t) { return f_alpha(zsign * sgn(a) * std::sqrt(t)); };
      auto g_minus = [&](Real t) { return f_beta(sgn(a) * std::sqrt(t)); };
      for (int n = 1; n <= order; ++n) {
        Real cons = 0;
        Real jump = std::abs(detail::jump_extrapolated(g_plus, g_minus, 4e-2 * d2, n, &cons));
        rep.lg3_jumps[n - 1] = std::max(rep.lg3_jumps[n - 1], jump);
        rep.lg3_consistency[n - 1] = std::max(rep.lg3_consistency[n - 1], cons);
      }
    }
  }
  for (Real j : rep.lg3_jumps) rep.lg3_max_jump = std::max(rep.lg3_max_jump, j);

  // Lorentzian tangent plane along the included rays: span of the limit
  // velocity (-a^2 f_alpha''(0), a, 0) of the converse construction and the
  // null ray direction.
  Real fpp = (f_alpha(hd) - 2 * f_alpha(0) + f_alpha(-hd)) / (hd * hd);
  rep.lorentzian_max_det = -std::numeric_limits<Real>::infinity();
  Chart ch = Chart::a2();
  for (Real a : {0.25 * delta, -0.25 * delta, 0.5 * delta, -0.5 * delta}) {
    for (int zsign : {+1, -1}) {
      MVec3 u{{-a * a * fpp, a, 0}, ch};
      MVec3 v{{0, 1, static_cast<Real>(zsign)}, ch};
      Real det = lorentz_dot(u, u) * lorentz_dot(v, v) - sq(lorentz_dot(u, v));
      rep.lorentzian_max_det = std::max(rep.lorentzian_max_det, det);
    }
  }
  rep.lorentzian_along_patch = rep.lorentzian_max_det < -1e-12;

  rep.passed = rep.perpendicular && rep.lorentzian_along_patch &&
               rep.lg3_max_jump <= tol && rep.value_gap <= tol;
  return rep;
}

inline GluingReport check_local_gluing(const GluingSeed& seed, int order = 3,
                                       Real tol = 1e-8) {
  return check_local_gluing([&seed](Real s) { return seed.f_alpha(s); },
                            [&seed](Real s) { return seed.f_beta(s); }, seed.delta,
                            order, tol);
}

enum class GluedClass { PlanePerpToAxis, OneSheetHyperboloid, NotASolution };

struct Classification {
  GluedClass kind = GluedClass::NotASolution;
  Real center = 0;  // axis coordinate of the fitted surface
  Real radius = 0;  // hyperboloid radius
  Real plane_fit_rms = 0;
  Real hyperboloid_fit_rms = 0;
  Real willmore_residual_max = 0;
};

/// Classifies a glued surface against the non-fundamental solution families:
/// a Lorentzian plane x = A or a one-sheet hyperboloid
/// (x-A)^2 + y^2 - z^2 = rho^2, by least squares over all piece vertices,
/// cross-checked against the maximal Willmore residual.
inline Classification classify_glued_solution(const GluedSurface& glued,
                                              Real fit_tol = 1e-6) {
  Classification out;
  // gather vertices
  std::vector<Vec3> pts;
  for (const RotationalSurface* piece : glued.pieces())
    pts.insert(pts.end(), piece->X.begin(), piece->X.end());

  Real scale = 0;
  for (const auto& p : pts) scale = std::max(scale, std::sqrt(euclid_norm2(p)));
  if (scale == 0) scale = 1;

  // plane x = A
  Real mean_x = 0;
  for (const auto& p : pts) mean_x += p[0];
  mean_x /= static_cast<Real>(pts.size());
  Real ss = 0;
  for (const auto& p : pts) ss += sq(p[0] - mean_x);
  out.plane_fit_rms = std::sqrt(ss / static_cast<Real>(pts.size())) / scale;

  // hyperboloid (x-A)^2 + y^2 - z^2 = rho^2  <=>  q = 2A x + (rho^2 - A^2),
  // q := x^2 + y^2 - z^2: linear least squares in (c1, c0)
  Real sxx = 0, sx = 0, s1 = 0, sxq = 0, sq_ = 0;
  for (const auto& p : pts) {
    Real q = p[0] * p[0] + p[1] * p[1] - p[2] * p[2];
    sxx += p[0] * p[0];
    sx += p[0];
    s1 += 1;
    sxq += p[0] * q;
    sq_ += q;
  }
  Real det = sxx * s1 - sx * sx;
  Real c1 = 0, c0 = 0;
  if (std::abs(det) > 1e-14) {
    c1 = (sxq * s1 - sx * sq_) / det;
    c0 = (sxx * sq_ - sx * sxq) / det;
  } else {
    c0 = sq_ / s1;
  }
  Real hss = 0;
  for (const auto& p : pts) {
    Real q = p[0] * p[0] + p[1] * p[1] - p[2] * p[2];
    hss += sq(q - c1 * p[0] - c0);
  }
  out.hyperboloid_fit_rms = std::sqrt(hss / static_cast<Real>(pts.size())) / (scale * scale);
  Real A = 0.5 * c1;
  Real rho2 = c0 + A * A;

  for (const RotationalSurface* piece : glued.pieces())
    out.willmore_residual_max =
        std::max(out.willmore_residual_max, max_abs_residual(willmore_residual(*piece)));

  if (out.plane_fit_rms < fit_tol) {
    out.kind = GluedClass::PlanePerpToAxis;
    out.center = mean_x;
  } else if (out.hyperboloid_fit_rms < fit_tol && rho2 > 0) {
    out.kind = GluedClass::OneSheetHyperboloid;
    out.center = A;
    out.radius = std::sqrt(rho2);
  } else {
    out.kind = GluedClass::NotASolution;
  }
  return out;
}

inline const char* glued_class_name(GluedClass c) {
  switch (c) {
    case GluedClass::PlanePerpToAxis: return "plane-perp-to-axis";
    case GluedClass::OneSheetHyperboloid: return "one-sheet-hyperboloid";
    default: return "not-a-solution";
  }
}

/// OBJ export with one group per fundamental-region piece and the light-like
/// patch rays as polylines.
inline std::string glued_surface_obj(const GluedSurface& glued) {
  std::vector<ObjGroup> groups;
  groups.push_back(surface_obj_group(glued.alpha_plus, "R+"));
  groups.push_back(surface_obj_group(glued.alpha_minus, "R-"));
  groups.push_back(surface_obj_group(glued.beta_plus, "Q+"));
  groups.push_back(surface_obj_group(glued.beta_minus, "Q-"));
  ObjGroup patch;
  patch.name = "patch";
  Real x0 = glued.patch.point[0];
  Real a = glued.seed.delta / std::sqrt(2.0);
  const std::array<std::pair<Real, Real>, 4> dirs = {
      {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
  long idx = 0;
  patch.vertices.push_back(glued.patch.point);
  ++idx;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!glued.patch.rays[r]) continue;
    patch.vertices.push_back({x0, dirs[r].first * a, dirs[r].second * a});
    patch.polylines.push_back({0, idx});
    ++idx;
  }
  groups.push_back(std::move(patch));
  return obj_export(groups);
}

inline Json gluing_report_json(const GluingReport& rep) {
  Json j = Json::object();
  j.set("value_gap", rep.value_gap)
      .set("fa_prime0", rep.fa_prime0)
      .set("fb_prime0", rep.fb_prime0)
      .set("perpendicular", rep.perpendicular)
      .set("lg3_jumps", Json::array(rep.lg3_jumps))
      .set("lg3_consistency", Json::array(rep.lg3_consistency))
      .set("lg3_max_jump", rep.lg3_max_jump)
      .set("lorentzian_max_det", rep.lorentzian_max_det)
      .set("lorentzian_along_patch", rep.lorentzian_along_patch)
      .set("passed", rep.passed);
  return j;
}

}  // namespace lw

#endif  // LW_GLUING_HPP
