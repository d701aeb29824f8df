#ifndef LW_CORE_HPP
#define LW_CORE_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lw {

using Real = double;
using Vec2 = std::array<Real, 2>;
using Vec3 = std::array<Real, 3>;
using Mat2 = std::array<std::array<Real, 2>, 2>;
using Mat3 = std::array<std::array<Real, 3>, 3>;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

inline Real sq(Real x) { return x * x; }

inline Real sgn(Real x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

/// Thrown when an evaluation lands on (or within tolerance of) a pole of a
/// transformed elliptic function. Carries the nearest pole abscissa so the
/// caller can build excluded-domain sets.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, Real pole_abscissa)
      : std::runtime_error(what), pole(pole_abscissa) {}
  Real pole;
};

inline Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Real s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Vec3 mat3_apply(const Mat3& a, const Vec3& v) {
  Vec3 w{};
  for (int i = 0; i < 3; ++i)
    w[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return w;
}

inline Mat3 mat3_transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

inline Vec3 vec3_sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 vec3_scale(Real c, const Vec3& a) {
  return {c * a[0], c * a[1], c * a[2]};
}

inline Real euclid_norm2(const Vec3& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

/// Number of worker threads: min(LW_THREADS, hardware_concurrency), at least 1.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("LW_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

/// Splits [0,n) into contiguous blocks, one per worker. Each worker writes
/// disjoint output slices, so results do not depend on the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  unsigned nw = thread_budget();
  if (nw <= 1 || n < 64) {
    body(0, n);
    return;
  }
  std::size_t chunk = (n + nw - 1) / nw;
  std::vector<std::thread> pool;
  for (std::size_t lo = 0; lo < n; lo += chunk) {
    std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lw

#endif  // LW_CORE_HPP
