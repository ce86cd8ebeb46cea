#pragma once

// Exact integer/rational kernel: orientation predicate, line intersection,
// lattice points on segments. No floating point anywhere. Every intermediate
// either fits by construction or goes through checked arithmetic that throws
// std::overflow_error; nothing wraps silently.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "otg/error.hpp"

namespace otg {

using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit multiplication overflow");
  return r;
}

inline u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline int sign(i128 v) { return (v > 0) - (v < 0); }

inline i128 gcd(i128 a, i128 b) {
  u128 x = magnitude(a), y = magnitude(b);
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  if (x > u128(std::numeric_limits<i128>::max())) throw std::overflow_error("gcd exceeds 127 bits");
  return i128(x);
}

// floor(a / b) for b != 0
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Fixed-width unsigned magnitude, 6 x 64-bit limbs (384 bits). Enough for a
/// product of three 128-bit factors.
struct WideMagnitude {
  std::array<std::uint64_t, 6> limbs{};

  void multiply(u128 f) {
    const std::uint64_t lo = std::uint64_t(f);
    const std::uint64_t hi = std::uint64_t(f >> 64);
    std::array<std::uint64_t, 7> out{};
    for (int part = 0; part < 2; ++part) {
      const std::uint64_t m = part == 0 ? lo : hi;
      if (m == 0) continue;
      u128 carry = 0;
      for (std::size_t i = 0; i < limbs.size(); ++i) {
        const std::size_t idx = i + std::size_t(part);
        if (idx >= out.size()) break;
        u128 cur = u128(limbs[i]) * m + out[idx] + carry;
        out[idx] = std::uint64_t(cur);
        carry = cur >> 64;
      }
      for (std::size_t idx = limbs.size() + std::size_t(part); carry != 0 && idx < out.size(); ++idx) {
        u128 cur = u128(out[idx]) + carry;
        out[idx] = std::uint64_t(cur);
        carry = cur >> 64;
      }
      if (carry != 0) throw std::overflow_error("wide product exceeds 384 bits");
    }
    if (out[6] != 0) throw std::overflow_error("wide product exceeds 384 bits");
    std::copy_n(out.begin(), limbs.size(), limbs.begin());
  }

  friend std::strong_ordering operator<=>(const WideMagnitude& a, const WideMagnitude& b) {
    for (std::size_t i = a.limbs.size(); i-- > 0;) {
      if (a.limbs[i] != b.limbs[i]) return a.limbs[i] <=> b.limbs[i];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const WideMagnitude&, const WideMagnitude&) = default;
};

/// Exact sign of (prod(lhs) - prod(rhs)) for up to three 128-bit factors per side.
inline int sign_of_product_difference(std::initializer_list<i128> lhs, std::initializer_list<i128> rhs) {
  auto side = [](std::initializer_list<i128> fs, int& s) {
    s = 1;
    WideMagnitude w;
    w.limbs[0] = 1;
    for (i128 f : fs) {
      s *= sign(f);
      w.multiply(magnitude(f));
    }
    return w;
  };
  int sl = 0, sr = 0;
  const WideMagnitude ml = side(lhs, sl);
  const WideMagnitude mr = side(rhs, sr);
  if (sl != sr) return sl > sr ? 1 : -1;
  if (sl == 0) return 0;
  auto c = ml <=> mr;
  int mag_cmp = c < 0 ? -1 : (c > 0 ? 1 : 0);
  return sl * mag_cmp;
}

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  u128 m = magnitude(v);
  std::string s;
  while (m != 0) {
    s.push_back(char('0' + int(m % 10)));
    m /= 10;
  }
  if (v < 0) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace detail

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

enum class Orientation : int { Minus = -1, Zero = 0, Plus = 1 };

inline Orientation from_sign(int s) {
  return s > 0 ? Orientation::Plus : (s < 0 ? Orientation::Minus : Orientation::Zero);
}

inline Orientation operator-(Orientation o) { return Orientation(-int(o)); }

inline char to_char(Orientation o) {
  return o == Orientation::Plus ? '+' : (o == Orientation::Minus ? '-' : '0');
}

inline std::ostream& operator<<(std::ostream& os, Orientation o) { return os << to_char(o); }

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(i128 num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_sub(0, num_);
      den_ = detail::checked_sub(0, den_);
    }
    const i128 g = detail::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  i128 floor() const { return detail::floor_div(num_, den_); }
  i128 ceil() const { return detail::ceil_div(num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int s = detail::sign_of_product_difference({a.num_, b.den_}, {b.num_, a.den_});
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(detail::checked_sub(detail::checked_mul(a.num_, b.den_), detail::checked_mul(b.num_, a.den_)),
                    detail::checked_mul(a.den_, b.den_));
  }

  std::string str() const {
    if (den_ == 1) return detail::to_string(num_);
    return detail::to_string(num_) + "/" + detail::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

/// Sign of det[[1,1,1],[ax,bx,cx],[ay,by,cy]]; Plus iff c is strictly left of
/// the directed line a->b. Exact for all 64-bit coordinates.
inline Orientation orient(Point a, Point b, Point c) {
  const i128 abx = i128(b.x) - a.x, aby = i128(b.y) - a.y;
  const i128 acx = i128(c.x) - a.x, acy = i128(c.y) - a.y;
  // |differences| < 2^64, so each product magnitude is below 2^128.
  const u128 l = detail::magnitude(abx) * detail::magnitude(acy);
  const u128 r = detail::magnitude(aby) * detail::magnitude(acx);
  const int sl = detail::sign(abx) * detail::sign(acy);
  const int sr = detail::sign(aby) * detail::sign(acx);
  if (sl != sr) return from_sign(sl > sr ? 1 : -1);
  if (sl == 0 || l == r) return Orientation::Zero;
  return from_sign(l > r ? sl : -sl);
}

/// Orientation of a rational point q against the directed line a->b.
inline Orientation orient_hom(Point a, Point b, const RationalPoint& q) {
  using namespace detail;
  const i128 abx = i128(b.x) - a.x, aby = i128(b.y) - a.y;
  // (qy - ay) = ny / dy, (qx - ax) = nx / dx; compare abx*ny*dx with aby*nx*dy.
  const i128 ny = checked_sub(q.y.num(), checked_mul(a.y, q.y.den()));
  const i128 nx = checked_sub(q.x.num(), checked_mul(a.x, q.x.den()));
  return from_sign(sign_of_product_difference({abx, ny, q.x.den()}, {aby, nx, q.y.den()}));
}

/// Exact intersection of line(a1,a2) with line(b1,b2).
inline RationalPoint intersect_lines(Point a1, Point a2, Point b1, Point b2) {
  using namespace detail;
  const i128 rx = i128(a2.x) - a1.x, ry = i128(a2.y) - a1.y;
  const i128 sx = i128(b2.x) - b1.x, sy = i128(b2.y) - b1.y;
  const i128 den = checked_sub(checked_mul(rx, sy), checked_mul(ry, sx));
  if (den == 0) throw Error(ErrorKind::ParallelOrCoincident, "lines have parallel directions");
  const i128 wx = i128(b1.x) - a1.x, wy = i128(b1.y) - a1.y;
  const i128 t = checked_sub(checked_mul(wx, sy), checked_mul(wy, sx));
  const i128 x = checked_add(checked_mul(a1.x, den), checked_mul(rx, t));
  const i128 y = checked_add(checked_mul(a1.y, den), checked_mul(ry, t));
  return {Rational(x, den), Rational(y, den)};
}

/// All integer points on the closed segment [a, b], ordered from a to b.
inline std::vector<Point> segment_lattice_points(Point a, Point b) {
  std::int64_t dx = 0, dy = 0;
  if (__builtin_sub_overflow(b.x, a.x, &dx) || __builtin_sub_overflow(b.y, a.y, &dy))
    throw std::overflow_error("segment extent exceeds 64 bits");
  const std::int64_t g = std::gcd(dx, dy);
  if (g == 0) return {a};
  const std::int64_t sx = dx / g, sy = dy / g;
  std::vector<Point> out;
  out.reserve(std::size_t(g) + 1);
  for (std::int64_t i = 0; i <= g; ++i) out.push_back({a.x + i * sx, a.y + i * sy});
  return out;
}

}  // namespace otg
