#ifndef LW_ELASTICA_HPP
#define LW_ELASTICA_HPP

#include <functional>
#include <utility>
#include <vector>

#include "lw/elliptic.hpp"
#include "lw/halfplane.hpp"

// Free-elastica curvature families in the half-plane models, the
// Euler-Lagrange residual, excluded (pole) domains, and reconstruction of
// profile curves by Frenet integration.
//
// The free-elastica equation in a model of constant curvature G is
//
//     2 k'' + sigma k^3 + 2 eps1 G k = 0,
//
// with sigma = eps1 * eps2 (so sigma = -1 on Lorentzian models, +1 on the
// hyperbolic model). On the Lorentzian models this is the familiar
// 2k'' - k^3 + 2 e k = 0 with e the equation sign carried by the profile;
// on the hyperbolic model the cubic enters with the opposite sign. The
// cn-family solving it is k = C cn(lambda (s - a0), m) with
// lambda^2 = B/2 + A C^2/2 and m = A C^2 / (4 lambda^2), where A is the
// cubic coefficient and B the linear one; lambda^2 < 0 is evaluated through
// the imaginary-argument transformation and produces pole chains.

namespace lw {

enum class ElasticaFamily { Geodesic, CnFamily, ConstantCritical };

inline constexpr Real kPoleTolDefault = 1e-8;

struct ElasticaProfile {
  ElasticaFamily family = ElasticaFamily::Geodesic;
  Real C = 0.0;
  Real a0 = 0.0;
  int eps1 = 1;   // causal sign of the tangent in the model
  int eps2 = -1;  // equation sign: coefficient e in 2k'' - k^3 + 2 e k = 0
                  // (Lorentzian models; 0 selects the flat-plane family on
                  // the null-axis model). Fixed to -1 on the hyperbolic
                  // model, whose equation is 2k'' + k^3 - 2k = 0.
  HalfPlaneModel model;

  /// Cubic coefficient A of the Euler-Lagrange equation.
  Real eq_cubic() const { return model.lorentzian() ? -1.0 : 1.0; }
  /// Linear coefficient B of the Euler-Lagrange equation.
  Real eq_linear() const { return 2.0 * eps2; }

  Real lambda2() const { return eps2 + eq_cubic() * 0.5 * C * C; }
  Real m_param() const { return eq_cubic() * C * C / (4.0 * lambda2()); }

  void validate() const {
    if (eps1 != 1 && eps1 != -1)
      throw std::invalid_argument("elastica: eps1 must be +-1");
    switch (model.kind) {
      case ModelKind::AdS_A1:
        if (eps2 != -eps1)
          throw std::invalid_argument("elastica: AdS model requires eps2 = -eps1");
        break;
      case ModelKind::AdS_A3:
        if (eps2 != -eps1 && eps2 != 0)
          throw std::invalid_argument("elastica: null-axis model requires eps2 = -eps1 or 0");
        break;
      case ModelKind::DeSitter_R:
        if (eps2 != eps1)
          throw std::invalid_argument("elastica: de Sitter model requires eps2 = eps1");
        break;
      case ModelKind::Hyperbolic_Q:
        if (eps1 != 1 || eps2 != -1)
          throw std::invalid_argument("elastica: hyperbolic model requires eps1 = 1, eps2 = -1");
        break;
    }
    if (family == ElasticaFamily::CnFamily) {
      // the family degenerates as lambda -> 0 (C at the excluded constant);
      // near-degenerate amplitudes produce parameter blow-up in the
      // transformations, so reject a small neighborhood too
      if (std::abs(lambda2()) < 1e-6)
        throw std::invalid_argument(
            "elastica: C too close to the excluded constant (lambda ~ 0)");
    }
    if (family == ElasticaFamily::ConstantCritical) {
      Real k2 = -eq_linear() / eq_cubic();
      if (k2 <= 0)
        throw std::invalid_argument("elastica: no constant critical curvature for this sign");
      if (std::abs(C * C - k2) > 1e-9)
        throw std::invalid_argument("elastica: constant critical profile must have C = +-sqrt(2 eps2)");
    }
  }

  static ElasticaProfile geodesic(HalfPlaneModel model, int eps1) {
    ElasticaProfile p;
    p.family = ElasticaFamily::Geodesic;
    p.model = model;
    p.eps1 = eps1;
    p.eps2 = default_eps2(model, eps1);
    p.validate();
    return p;
  }

  static ElasticaProfile cn(HalfPlaneModel model, Real C, Real a0, int eps1) {
    ElasticaProfile p;
    p.family = ElasticaFamily::CnFamily;
    p.model = model;
    p.C = C;
    p.a0 = a0;
    p.eps1 = eps1;
    p.eps2 = default_eps2(model, eps1);
    p.validate();
    return p;
  }

  /// Flat-plane cn family on the null-axis model (eps2 = 0); these are the
  /// profiles whose rotated surfaces actually satisfy the Willmore equation
  /// there, the model being flat.
  static ElasticaProfile cn_flat_a3(HalfPlaneModel model, Real C, Real a0, int eps1) {
    ElasticaProfile p;
    p.family = ElasticaFamily::CnFamily;
    p.model = model;
    p.C = C;
    p.a0 = a0;
    p.eps1 = eps1;
    p.eps2 = 0;
    p.validate();
    return p;
  }

  static ElasticaProfile constant_critical(HalfPlaneModel model, int eps1, int sign) {
    ElasticaProfile p;
    p.family = ElasticaFamily::ConstantCritical;
    p.model = model;
    p.eps1 = eps1;
    p.eps2 = default_eps2(model, eps1);
    Real k2 = -p.eq_linear() / p.eq_cubic();
    if (k2 <= 0)
      throw std::invalid_argument("elastica: no constant critical curvature for this sign");
    p.C = sign >= 0 ? std::sqrt(k2) : -std::sqrt(k2);
    p.validate();
    return p;
  }

  static int default_eps2(const HalfPlaneModel& model, int eps1) {
    switch (model.kind) {
      case ModelKind::DeSitter_R: return eps1;
      case ModelKind::Hyperbolic_Q: return -1;
      default: return -eps1;
    }
  }
};

/// Excluded abscissas (curvature poles) of a profile inside a window.
struct ExcludedSet {
  std::vector<Real> poles;
  Real window_lo = 0, window_hi = 0;
  Real spacing = 0;  // 0 when pole-free
};

namespace detail {

/// Pole spacing structure of the cn family; first pole offset from a0 (in s),
/// or +inf when the family is pole-free.
inline Real first_pole_offset(const ElasticaProfile& p) {
  if (p.family != ElasticaFamily::CnFamily) return std::numeric_limits<Real>::infinity();
  Real l2 = p.lambda2();
  if (l2 >= 0) return std::numeric_limits<Real>::infinity();
  Real z1 = cn_first_zero(1.0 - p.m_param());
  if (!std::isfinite(z1)) return std::numeric_limits<Real>::infinity();
  return z1 / std::sqrt(-l2);
}

inline void check_pole_distance(const ElasticaProfile& p, Real s, Real tau_pole) {
  Real off = first_pole_offset(p);
  if (!std::isfinite(off)) return;
  Real u = std::abs(s - p.a0);
  Real q = std::round((u / off - 1.0) / 2.0);
  Real nearest = (2.0 * std::max(0.0, q) + 1.0) * off;
  if (std::abs(u - nearest) < tau_pole)
    throw PoleError("elastica curvature pole", p.a0 + sgn(s - p.a0) * nearest);
}

}  // namespace detail

/// kappa(s) of the profile. Raises PoleError within tau_pole of an excluded
/// abscissa.
inline Real curvature_at(const ElasticaProfile& p, Real s, Real tau_pole = kPoleTolDefault) {
  switch (p.family) {
    case ElasticaFamily::Geodesic: return 0.0;
    case ElasticaFamily::ConstantCritical: return p.C;
    default: break;
  }
  detail::check_pole_distance(p, s, tau_pole);
  Real l2 = p.lambda2(), m = p.m_param();
  if (l2 > 0) return p.C * jacobi(std::sqrt(l2) * (s - p.a0), m).cn;
  return p.C * cn_imag_arg(std::sqrt(-l2) * (s - p.a0), m);
}

struct KappaJet {
  Real k, k1, k2;  // kappa and its first two s-derivatives
};

/// Analytic derivatives through the cn chain rule (cn' = -sn dn and the
/// imaginary-argument counterpart); used by el_residual.
inline KappaJet curvature_jet(const ElasticaProfile& p, Real s, Real tau_pole = kPoleTolDefault) {
  switch (p.family) {
    case ElasticaFamily::Geodesic: return {0, 0, 0};
    case ElasticaFamily::ConstantCritical: return {p.C, 0, 0};
    default: break;
  }
  detail::check_pole_distance(p, s, tau_pole);
  Real l2 = p.lambda2(), m = p.m_param();
  if (l2 > 0) {
    Real lam = std::sqrt(l2);
    JacobiValues j = jacobi(lam * (s - p.a0), m);
    Real k = p.C * j.cn;
    Real k1 = -p.C * lam * j.sn * j.dn;
    Real k2 = p.C * l2 * (m * j.sn * j.sn - j.dn * j.dn) * j.cn;
    return {k, k1, k2};
  }
  Real lam = std::sqrt(-l2), pm = 1.0 - m;
  JacobiValues j = jacobi(lam * (s - p.a0), pm);
  Real w = 1.0 / j.cn;
  Real w1 = j.sn * j.dn / (j.cn * j.cn);
  Real w2 = (j.dn * j.dn - pm * j.sn * j.sn) / j.cn +
            2.0 * j.sn * j.sn * j.dn * j.dn / (j.cn * j.cn * j.cn);
  return {p.C * w, p.C * lam * w1, p.C * lam * lam * w2};
}

enum class ResidualMethod { Analytic, FiniteDifference };

/// Euler-Lagrange residual 2 k'' + A k^3 + B k of the profile's equation.
inline Real el_residual(const ElasticaProfile& p, Real s,
                        ResidualMethod method = ResidualMethod::Analytic,
                        Real tau_pole = kPoleTolDefault) {
  Real A = p.eq_cubic(), B = p.eq_linear();
  Real k, k2;
  if (method == ResidualMethod::Analytic) {
    KappaJet jet = curvature_jet(p, s, tau_pole);
    k = jet.k;
    k2 = jet.k2;
  } else {
    // 5-point central stencil
    const Real h = 1e-4;
    Real km2 = curvature_at(p, s - 2 * h, tau_pole), km1 = curvature_at(p, s - h, tau_pole);
    Real k0 = curvature_at(p, s, tau_pole);
    Real kp1 = curvature_at(p, s + h, tau_pole), kp2 = curvature_at(p, s + 2 * h, tau_pole);
    k = k0;
    k2 = (-km2 + 16 * km1 - 30 * k0 + 16 * kp1 - kp2) / (12 * h * h);
  }
  return 2 * k2 + A * k * k * k + B * k;
}

/// Pole abscissas a0 + (2n+1) * offset inside [window]. Pole-free families
/// (lambda^2 > 0, or the hyperbolic model's bounded branches) give an empty
/// set.
inline ExcludedSet excluded_domain(const ElasticaProfile& p, Real lo, Real hi) {
  ExcludedSet out;
  out.window_lo = lo;
  out.window_hi = hi;
  Real off = detail::first_pole_offset(p);
  if (!std::isfinite(off)) return out;
  out.spacing = 2.0 * off;
  // smallest n with a0 + (2n+1) off possibly in range, scanning both sides
  for (long n = 0;; ++n) {
    Real d = (2.0 * n + 1.0) * off;
    bool anyin = false;
    for (Real sp : {p.a0 + d, p.a0 - d}) {
      if (sp >= lo && sp <= hi) {
        out.poles.push_back(sp);
        anyin = true;
      }
    }
    if (!anyin && d > (hi - lo) + std::abs(p.a0 - 0.5 * (lo + hi))) break;
    if (n > 100000) break;
  }
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

struct ProfileSample {
  Real s;
  Vec2 pos;
  Vec2 tan;   // unit for the model metric, g(T,T) = eps1
  Vec2 acc;   // coordinate acceleration (from the Frenet relation)
  Real kappa;
};

struct ProfileCurve {
  HalfPlaneModel model;
  int eps1 = 1;
  std::vector<ProfileSample> samples;
  bool truncated = false;  // stopped early at the half-plane boundary
};

inline constexpr Real kBoundaryTolDefault = 1e-6;

/// Fixed-step RK4 integration of the Frenet system p' = T,
/// T'^k = eps2 kappa N^k - Gamma^k_ij T^i T^j, with per-step renormalization
/// of T. Terminates early (flagged) when the curve comes within tau_bdry of
/// the half-plane boundary.
inline ProfileCurve integrate_frenet(const HalfPlaneModel& model,
                                     const std::function<Real(Real)>& kappa,
                                     Vec2 start_pos, Vec2 start_tan, int eps1,
                                     Real s_lo, Real s_hi, Real step = 1e-3,
                                     Real tau_bdry = kBoundaryTolDefault,
                                     bool renormalize = true) {
  if (!model.inside(start_pos))
    throw std::invalid_argument("integrate_frenet: start outside the half-plane");
  Real q = model.dot(start_tan, start_tan, start_pos[1]);
  if (std::abs(q - eps1) > 1e-6)
    throw std::invalid_argument("integrate_frenet: start tangent not unit for eps1");

  auto rhs = [&](Real s, const Vec2& pos, const Vec2& tan, Vec2& dp, Vec2& dt) {
    Vec2 n;
    Real eps2;
    model.unit_normal(pos, tan, n, eps2);
    auto gam = model.christoffel(pos[1]);
    Real k = kappa(s);
    for (int c = 0; c < 2; ++c) {
      Real g2 = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g2 += gam[c][i][j] * tan[i] * tan[j];
      dt[c] = eps2 * k * n[c] - g2;
    }
    dp = tan;
  };

  long n_steps = std::lround((s_hi - s_lo) / step);
  if (n_steps < 1) throw std::invalid_argument("integrate_frenet: empty span");
  Real h = (s_hi - s_lo) / static_cast<Real>(n_steps);

  ProfileCurve out;
  out.model = model;
  out.eps1 = eps1;
  out.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  Vec2 pos = start_pos, tan = start_tan;
  auto push = [&](Real s) {
    Vec2 n;
    Real eps2;
    model.unit_normal(pos, tan, n, eps2);
    auto gam = model.christoffel(pos[1]);
    Real k = kappa(s);
    Vec2 acc;
    for (int c = 0; c < 2; ++c) {
      Real g2 = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g2 += gam[c][i][j] * tan[i] * tan[j];
      acc[c] = eps2 * k * n[c] - g2;
    }
    out.samples.push_back({s, pos, tan, acc, k});
  };
  push(s_lo);

  for (long i = 0; i < n_steps; ++i) {
    Real s = s_lo + h * static_cast<Real>(i);
    Vec2 k1p, k1t, k2p, k2t, k3p, k3t, k4p, k4t;
    rhs(s, pos, tan, k1p, k1t);
    Vec2 p2 = {pos[0] + 0.5 * h * k1p[0], pos[1] + 0.5 * h * k1p[1]};
    Vec2 t2 = {tan[0] + 0.5 * h * k1t[0], tan[1] + 0.5 * h * k1t[1]};
    rhs(s + 0.5 * h, p2, t2, k2p, k2t);
    Vec2 p3 = {pos[0] + 0.5 * h * k2p[0], pos[1] + 0.5 * h * k2p[1]};
    Vec2 t3 = {tan[0] + 0.5 * h * k2t[0], tan[1] + 0.5 * h * k2t[1]};
    rhs(s + 0.5 * h, p3, t3, k3p, k3t);
    Vec2 p4 = {pos[0] + h * k3p[0], pos[1] + h * k3p[1]};
    Vec2 t4 = {tan[0] + h * k3t[0], tan[1] + h * k3t[1]};
    rhs(s + h, p4, t4, k4p, k4t);
    for (int c = 0; c < 2; ++c) {
      pos[c] += h / 6.0 * (k1p[c] + 2 * k2p[c] + 2 * k3p[c] + k4p[c]);
      tan[c] += h / 6.0 * (k1t[c] + 2 * k2t[c] + 2 * k3t[c] + k4t[c]);
    }
    if (!model.inside(pos, tau_bdry) || !std::isfinite(pos[0]) || !std::isfinite(pos[1]) ||
        std::abs(pos[0]) + std::abs(pos[1]) > 1e12) {
      out.truncated = true;
      break;
    }
    if (renormalize) {
      Real tn = model.dot(tan, tan, pos[1]);
      Real scale = 1.0 / std::sqrt(std::abs(tn));
      tan = {tan[0] * scale, tan[1] * scale};
    }
    push(s + h);
  }
  return out;
}

/// Convenience: Frenet integration of an elastica profile from a given start.
inline ProfileCurve integrate_profile(const ElasticaProfile& p, Vec2 start_pos,
                                      Vec2 start_tan, Real s_lo, Real s_hi,
                                      Real step = 1e-3) {
  p.validate();
  return integrate_frenet(
      p.model, [&p](Real s) { return curvature_at(p, s); }, start_pos,
      start_tan, p.eps1, s_lo, s_hi, step);
}

/// Trapezoidal total squared curvature of a sampled curve.
inline Real total_squared_curvature(const ProfileCurve& curve) {
  if (curve.samples.size() < 2)
    throw std::invalid_argument("total_squared_curvature: need at least 2 samples");
  Real acc = 0;
  for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i) {
    const auto& a = curve.samples[i];
    const auto& b = curve.samples[i + 1];
    acc += 0.5 * (a.kappa * a.kappa + b.kappa * b.kappa) * (b.s - a.s);
  }
  return acc;
}

/// Max deviation of g(T,T) from eps1 over the samples.
inline Real unit_speed_defect(const ProfileCurve& curve) {
  Real worst = 0;
  for (const auto& smp : curve.samples) {
    Real q = curve.model.dot(smp.tan, smp.tan, smp.pos[1]);
    worst = std::max(worst, std::abs(q - curve.eps1));
  }
  return worst;
}

}  // namespace lw

#endif  // LW_ELASTICA_HPP
