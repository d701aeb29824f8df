#ifndef LW_ELLIPTIC_HPP
#define LW_ELLIPTIC_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lw/core.hpp"

// Real Jacobi elliptic kernel. All functions take the parameter m = k^2,
// which may be any real number: m in [0,1] is evaluated directly by the
// AGM / descending-Landen scheme, m < 0 goes through the negative-parameter
// transformation and m > 1 through the reciprocal-parameter transformation.
// Both transformations are validated against an independent ODE oracle in
// the test suite before anything downstream relies on them.

namespace lw {

/// Complete elliptic integral of the first kind, K(m) with parameter m = k^2.
/// K(m) = pi / (2 agm(1, sqrt(1-m))). Diverges as m -> 1.
inline Real complete_K(Real m) {
  if (!(m < 1.0)) throw std::domain_error("complete_K requires m < 1");
  Real a = 1.0, b = std::sqrt(1.0 - m);
  for (int it = 0; it < 60; ++it) {
    Real an = 0.5 * (a + b);
    Real bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) < 1e-17 * a) break;
  }
  return kPi / (2.0 * a);
}

struct JacobiValues {
  Real sn, cn, dn;
};

namespace detail {

/// AGM evaluation for parameter m in [0,1).
inline JacobiValues jacobi_agm(Real u, Real m) {
  if (m < 1e-14) {
    // cn(u,0) = cos u
    return {std::sin(u), std::cos(u), 1.0};
  }
  constexpr int kMax = 32;
  Real a[kMax], c[kMax];
  Real an = 1.0, bn = std::sqrt(1.0 - m), cn_ = std::sqrt(m);
  int n = 0;
  a[0] = an, c[0] = cn_;
  while (std::abs(cn_) > 1e-16 * an && n < kMax - 1) {
    Real a1 = 0.5 * (an + bn);
    Real c1 = 0.5 * (an - bn);
    bn = std::sqrt(an * bn);
    an = a1;
    cn_ = c1;
    ++n;
    a[n] = an;
    c[n] = cn_;
  }
  Real phi = std::ldexp(an * u, n);
  for (int k = n; k >= 1; --k) {
    Real s = c[k] / a[k] * std::sin(phi);
    s = std::max(-1.0, std::min(1.0, s));
    phi = 0.5 * (phi + std::asin(s));
  }
  Real sn = std::sin(phi), cnv = std::cos(phi);
  Real dn = std::sqrt(std::max(0.0, 1.0 - m * sn * sn));
  return {sn, cnv, dn};
}

}  // namespace detail

/// Jacobi sn, cn, dn for any real parameter m.
inline JacobiValues jacobi(Real u, Real m) {
  if (!std::isfinite(u) || !std::isfinite(m))
    throw std::invalid_argument("jacobi: non-finite argument");
  if (m >= 0.0 && m <= 1.0) {
    if (m > 1.0 - 1e-14) {
      // cn(u,1) = dn(u,1) = sech u, sn(u,1) = tanh u
      Real s = 1.0 / std::cosh(u);
      return {std::tanh(u), s, s};
    }
    return detail::jacobi_agm(u, m);
  }
  if (m < 0.0) {
    // negative parameter: m = -mu, mu1 = mu/(1+mu), v = u sqrt(1+mu)
    Real mu = -m, f = std::sqrt(1.0 + mu), mu1 = mu / (1.0 + mu);
    JacobiValues j = jacobi(u * f, mu1);
    return {j.sn / (f * j.dn), j.cn / j.dn, 1.0 / j.dn};
  }
  // m > 1: reciprocal parameter, v = u sqrt(m)
  Real rm = std::sqrt(m);
  JacobiValues j = jacobi(u * rm, 1.0 / m);
  return {j.sn / rm, j.dn, j.cn};
}

inline Real jacobi_sn(Real u, Real m) { return jacobi(u, m).sn; }
inline Real jacobi_cn(Real u, Real m) { return jacobi(u, m).cn; }
inline Real jacobi_dn(Real u, Real m) { return jacobi(u, m).dn; }

/// First positive zero of u -> cn(u, m); +infinity when cn does not vanish
/// on the real line (m >= 1, where cn degenerates to a sech / dn shape).
inline Real cn_first_zero(Real m) {
  if (m >= 1.0) return std::numeric_limits<Real>::infinity();
  if (m >= 0.0) return complete_K(m);
  Real mu = -m;
  return complete_K(mu / (1.0 + mu)) / std::sqrt(1.0 + mu);
}

/// Real value of cn(i u, m) via the imaginary-argument transformation
/// cn(iu, k) = 1 / cn(u, k'), k'^2 = 1 - m. Has poles at the zeros of
/// cn(., 1-m); evaluation within tau_u of a pole raises PoleError carrying
/// the nearest pole abscissa (in u).
inline Real cn_imag_arg(Real u, Real m, Real tau_u = 1e-10) {
  Real p = 1.0 - m;
  Real z1 = cn_first_zero(p);
  if (std::isfinite(z1)) {
    Real q = std::round((std::abs(u) / z1 - 1.0) / 2.0);
    Real nearest = (2.0 * std::max(0.0, q) + 1.0) * z1;
    if (std::abs(std::abs(u) - nearest) < tau_u)
      throw PoleError("cn_imag_arg: argument at a pole", sgn(u) * nearest);
  }
  return 1.0 / jacobi(u, p).cn;
}

}  // namespace lw

#endif  // LW_ELLIPTIC_HPP
