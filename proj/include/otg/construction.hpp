#pragma once

// Polynomial-grid construction: four scaled copies of the mod-p parabola
// frame a central square cut into (p^2 - p)^2 almost-square regions; the
// remaining n - 4p points go one per chosen region, each at the
// lexicographically smallest grid point not killed by a line through two
// earlier points.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otg/chirotope.hpp"
#include "otg/error.hpp"
#include "otg/exact_geom.hpp"
#include "otg/splitmix.hpp"

namespace otg {

inline constexpr std::int64_t kMinPoints = 32;
inline constexpr int kMaxResampleAttempts = 1000;

inline std::int64_t floor_log2(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("floor_log2 needs n >= 1");
  return std::int64_t(std::bit_width(std::uint64_t(n))) - 1;
}

inline bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::int64_t d = 3; d <= v / d; d += 2)
    if (v % d == 0) return false;
  return true;
}

/// Smallest prime p with n / (2 log n) < p < n / log n, log = floor(log2).
inline std::int64_t find_prime(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("find_prime needs n >= 4");
  const std::int64_t lg = floor_log2(n);
  for (std::int64_t p = n / (2 * lg) + 1; p * lg < n; ++p)
    if (2 * lg * p > n && is_prime(p)) return p;
  throw Error(ErrorKind::NoPrimeInRange, "no prime strictly between n/(2 log n) and n/log n for n=" + std::to_string(n));
}

/// The p points (x, x^2 mod p) for x = 1..p, residue 0 represented by p.
inline std::vector<Point> build_qp(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Point> q;
  q.reserve(std::size_t(p));
  for (std::int64_t x = 1; x <= p; ++x) {
    const std::int64_t r = (x % p) * (x % p) % p;
    q.push_back({x, r == 0 ? p : r});
  }
  return q;
}

struct ConstructionParams {
  std::int64_t n = 0;
  std::int64_t log_n = 0;
  std::int64_t p = 0;
  std::int64_t alpha = 0;
  std::int64_t scale = 0;  // alpha * n * log_n
  std::int64_t m = 0;      // alpha * (2n^2 + n^3)
  std::int64_t grid_lo = 0;
  std::int64_t grid_hi = 0;
  std::int64_t grid_side_bound = 0;  // 3n^4

  std::int64_t central_lo() const { return alpha * n * n; }
  std::int64_t central_hi() const { return 2 * alpha * n * n; }
  std::int64_t extras() const { return n - 4 * p; }
  std::int64_t region_count() const { return (p * p - p) * (p * p - p); }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

inline ConstructionParams derive_params(std::int64_t n) {
  if (n < kMinPoints) throw Error(ErrorKind::NTooSmall, "n=" + std::to_string(n) + " is below the minimum of 32");
  using detail::checked_add;
  using detail::checked_mul;
  ConstructionParams c;
  c.n = n;
  c.log_n = floor_log2(n);
  c.p = find_prime(n);
  const i128 n2 = checked_mul(n, n);
  const i128 n3 = checked_mul(n2, n);
  const i128 n4 = checked_mul(n3, n);
  const i128 alpha = 2 * i128(n);
  const i128 m = checked_mul(alpha, checked_add(2 * n2, n3));
  const i128 side = checked_mul(3, n4);
  // keep every grid coordinate and its square-scale products in range
  if (side > (i128(1) << 60)) throw Error(ErrorKind::BoundViolation, "grid too large for 64-bit coordinates");
  c.alpha = std::int64_t(alpha);
  c.scale = std::int64_t(alpha * n * c.log_n);
  c.m = std::int64_t(m);
  c.grid_lo = -c.p;
  c.grid_hi = c.m + c.p;
  c.grid_side_bound = std::int64_t(side);
  if (!(2 * c.log_n * c.p > n && c.p * c.log_n < n))
    throw Error(ErrorKind::BoundViolation, "prime outside the open window");
  if (4 * c.p > n) throw Error(ErrorKind::BoundViolation, "4p exceeds n");
  if (c.m + 2 * c.p > c.grid_side_bound) throw Error(ErrorKind::BoundViolation, "m + 2p exceeds 3n^4");
  return c;
}

/// Four copies of Q_p: D below and U above the central square (sorted by x),
/// L left and R right of it (sorted by y).
struct Frame {
  std::vector<Point> D, U, L, R;

  /// Frame points in label order D, U, L, R.
  std::vector<Point> labeled() const {
    std::vector<Point> out;
    out.reserve(D.size() * 4);
    for (const auto* part : {&D, &U, &L, &R}) out.insert(out.end(), part->begin(), part->end());
    return out;
  }
};

/// Builds the frame without checking degeneracy.
inline Frame build_frame_unchecked(const ConstructionParams& c) {
  const std::int64_t base = c.central_lo();
  Frame f;
  for (const Point& q : build_qp(c.p)) {
    f.D.push_back({base + c.scale * q.x, -c.p + q.y});
    f.U.push_back({base + c.scale * q.x, c.m + q.y});
    f.L.push_back({-c.p + q.y, base + c.scale * q.x});
    f.R.push_back({c.m + q.y, base + c.scale * q.x});
  }
  auto by_x = [](const Point& a, const Point& b) { return a.x < b.x; };
  auto by_y = [](const Point& a, const Point& b) { return a.y < b.y; };
  std::sort(f.D.begin(), f.D.end(), by_x);
  std::sort(f.U.begin(), f.U.end(), by_x);
  std::sort(f.L.begin(), f.L.end(), by_y);
  std::sort(f.R.begin(), f.R.end(), by_y);
  return f;
}

/// Throws DegenerateError(FrameDegenerate) with frame labels if any three of
/// the 4p frame points are collinear.
inline Frame build_frame(const ConstructionParams& c) {
  Frame f = build_frame_unchecked(c);
  if (auto w = find_collinear_triple(f.labeled())) throw DegenerateError(ErrorKind::FrameDegenerate, *w);
  return f;
}

struct RegionKey {
  std::int64_t l_index = 0;
  std::int64_t r_gap = 0;
  std::int64_t d_index = 0;
  std::int64_t u_gap = 0;

  std::int64_t flat(std::int64_t p) const { return ((l_index * (p - 1) + r_gap) * p + d_index) * (p - 1) + u_gap; }

  static RegionKey from_flat(std::int64_t p, std::int64_t flat) {
    RegionKey k;
    k.u_gap = flat % (p - 1);
    flat /= (p - 1);
    k.d_index = flat % p;
    flat /= p;
    k.r_gap = flat % (p - 1);
    k.l_index = flat / (p - 1);
    return k;
  }

  bool valid(std::int64_t p) const {
    return l_index >= 0 && l_index < p && d_index >= 0 && d_index < p && r_gap >= 0 && r_gap < p - 1 &&
           u_gap >= 0 && u_gap < p - 1;
  }

  friend auto operator<=>(const RegionKey&, const RegionKey&) = default;
};

/// Directed boundary line.
struct Line {
  Point from;
  Point to;
};

/// Almost-square cell. Interior points q satisfy
///   orient(l, r1, q) = Plus,  orient(l, r2, q) = Minus   (between the horizontals)
///   orient(d, u1, q) = Minus, orient(d, u2, q) = Plus    (between the verticals)
/// with r1 below r2 and u1 left of u2. Boundary points are excluded.
struct Region {
  RegionKey key;
  Line lower, upper;  // (l, r1), (l, r2)
  Line left, right;   // (d, u1), (d, u2)
  RationalPoint a;    // top-left
  RationalPoint b;    // bottom-left
  RationalPoint c;    // top-right
  RationalPoint dp;   // bottom-right

  bool contains(Point q) const {
    return orient(lower.from, lower.to, q) == Orientation::Plus &&
           orient(upper.from, upper.to, q) == Orientation::Minus &&
           orient(left.from, left.to, q) == Orientation::Minus &&
           orient(right.from, right.to, q) == Orientation::Plus;
  }

  /// Vertical distance between the left vertices.
  Rational delta() const { return a.y - b.y; }

  Rational min_x() const { return std::min({a.x, b.x, c.x, dp.x}); }
  Rational max_x() const { return std::max({a.x, b.x, c.x, dp.x}); }
};

inline Region make_region(RegionKey key, Line lower, Line upper, Line left, Line right) {
  Region r{key, lower, upper, left, right, {}, {}, {}, {}};
  r.a = intersect_lines(upper.from, upper.to, left.from, left.to);
  r.b = intersect_lines(lower.from, lower.to, left.from, left.to);
  r.c = intersect_lines(upper.from, upper.to, right.from, right.to);
  r.dp = intersect_lines(lower.from, lower.to, right.from, right.to);
  return r;
}

inline Region region_from_key(const Frame& f, const ConstructionParams& c, RegionKey key) {
  if (!key.valid(c.p)) throw Error(ErrorKind::InvalidParams, "region key out of range");
  const auto li = std::size_t(key.l_index), ri = std::size_t(key.r_gap);
  const auto di = std::size_t(key.d_index), ui = std::size_t(key.u_gap);
  return make_region(key, {f.L[li], f.R[ri]}, {f.L[li], f.R[ri + 1]}, {f.D[di], f.U[ui]}, {f.D[di], f.U[ui + 1]});
}

namespace detail {

/// Integer y-interval [lo, hi] of one grid column.
struct ColumnBounds {
  std::optional<i128> lo, hi;
  bool empty = false;

  void at_least(i128 v) {
    if (!lo || v > *lo) lo = v;
  }
  void at_most(i128 v) {
    if (!hi || v < *hi) hi = v;
  }
};

/// Restricts column x to points q with orient(line.from, line.to, q) == want.
/// orient = A*y + C with A = dx, C = -dx*from.y - dy*(x - from.x).
inline void constrain_column(ColumnBounds& cb, const Line& line, Orientation want, i128 x) {
  const i128 dx = i128(line.to.x) - line.from.x;
  const i128 dy = i128(line.to.y) - line.from.y;
  const i128 c = checked_sub(checked_mul(-dx, line.from.y), checked_mul(dy, checked_sub(x, line.from.x)));
  if (dx == 0) {
    if (from_sign(sign(c)) != want) cb.empty = true;
    return;
  }
  // A*y + C has sign `want`  <=>  y compared to -C/A
  const bool greater = (dx > 0) == (want == Orientation::Plus);
  const i128 num = -c;
  if (greater)
    cb.at_least(floor_div(num, dx) + 1);
  else
    cb.at_most(ceil_div(num, dx) - 1);
}

inline ColumnBounds column_bounds(const Region& r, i128 x) {
  ColumnBounds cb;
  constrain_column(cb, r.lower, Orientation::Plus, x);
  constrain_column(cb, r.upper, Orientation::Minus, x);
  constrain_column(cb, r.left, Orientation::Minus, x);
  constrain_column(cb, r.right, Orientation::Plus, x);
  if (!cb.lo || !cb.hi || *cb.lo > *cb.hi) cb.empty = true;
  return cb;
}

}  // namespace detail

/// Number of grid points strictly inside the region, counted column by column.
inline std::int64_t region_grid_count(const Region& r) {
  std::int64_t count = 0;
  const i128 x_end = r.max_x().floor();
  for (i128 x = r.min_x().ceil(); x <= x_end; ++x) {
    const auto cb = detail::column_bounds(r, x);
    if (!cb.empty) count += std::int64_t(*cb.hi - *cb.lo + 1);
  }
  return count;
}

/// Lexicographic (x, then y) stream over the grid points strictly inside a region.
class RegionPoints {
 public:
  explicit RegionPoints(const Region& r) : region_(r), x_(r.min_x().ceil()), x_end_(r.max_x().floor()) {
    load_column();
  }

  std::optional<Point> next() {
    if (x_ > x_end_) return std::nullopt;
    const Point q{std::int64_t(x_), std::int64_t(y_)};
    if (++y_ > y_hi_) {
      ++x_;
      load_column();
    }
    return q;
  }

  class iterator {
   public:
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(RegionPoints* src) : src_(src) { ++*this; }
    const Point& operator*() const { return cur_; }
    iterator& operator++() {
      auto v = src_->next();
      if (v)
        cur_ = *v;
      else
        src_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return src_ == nullptr; }

   private:
    RegionPoints* src_ = nullptr;
    Point cur_{};
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  void load_column() {
    for (; x_ <= x_end_; ++x_) {
      const auto cb = detail::column_bounds(region_, x_);
      if (cb.empty) continue;
      y_ = *cb.lo;
      y_hi_ = *cb.hi;
      return;
    }
  }

  Region region_;
  i128 x_, x_end_;
  i128 y_ = 0, y_hi_ = -1;
};

inline RegionPoints iterate_region_points(const Region& r) { return RegionPoints(r); }

/// First pair (i, j), 1-based with i < j, of placed points collinear with q.
inline std::optional<std::pair<std::size_t, std::size_t>> is_killed(Point q, std::span<const Point> placed) {
  for (std::size_t i = 0; i < placed.size(); ++i)
    for (std::size_t j = i + 1; j < placed.size(); ++j)
      if (orient(placed[i], placed[j], q) == Orientation::Zero) return std::pair{i + 1, j + 1};
  return std::nullopt;
}

/// Lexicographically smallest region point not killed by any placed pair;
/// nullopt means the region is dead.
inline std::optional<Point> find_alive_point(const Region& r, std::span<const Point> placed) {
  for (Point q : iterate_region_points(r))
    if (!is_killed(q, placed)) return q;
  return std::nullopt;
}

using PlacementVector = std::vector<RegionKey>;

/// Points placed so far: the frame in label order, then extras.
class PlacementState {
 public:
  explicit PlacementState(const ConstructionParams& c) : params_(c), frame_(build_frame(c)), points_(frame_.labeled()) {}

  const ConstructionParams& params() const { return params_; }
  const Frame& frame() const { return frame_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t k() const { return points_.size(); }

  /// Places a point in the region if it is alive.
  std::optional<Point> try_place(RegionKey key) {
    const Region r = region_from_key(frame_, params_, key);
    auto q = find_alive_point(r, points_);
    if (q) points_.push_back(*q);
    return q;
  }

 private:
  ConstructionParams params_;
  Frame frame_;
  std::vector<Point> points_;
};

inline LabeledPointSet place_all(const ConstructionParams& c, const PlacementVector& placement) {
  if (std::int64_t(placement.size()) != c.extras())
    throw Error(ErrorKind::Usage, "placement has " + std::to_string(placement.size()) + " entries, expected " +
                                      std::to_string(c.extras()));
  PlacementState state(c);
  for (std::size_t step = 0; step < placement.size(); ++step)
    if (!state.try_place(placement[step])) throw RegionDeadError(step);
  return LabeledPointSet{state.points()};
}

/// n - 4p keys, key = SplitMix64(seed).next() mod (p^2 - p)^2, resampling
/// dead regions up to 1000 times per step.
inline PlacementVector random_placement(const ConstructionParams& c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto count = std::uint64_t(c.region_count());
  PlacementState state(c);
  PlacementVector out;
  out.reserve(std::size_t(c.extras()));
  for (std::int64_t step = 0; step < c.extras(); ++step) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxResampleAttempts && !placed; ++attempt) {
      const RegionKey key = RegionKey::from_flat(c.p, std::int64_t(rng.next() % count));
      if (state.try_place(key)) {
        out.push_back(key);
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorKind::ExhaustedResampling, "no alive region found at step " + std::to_string(step));
  }
  return out;
}

/// Number of regions that still have an unkilled grid point.
inline std::int64_t alive_count(const ConstructionParams& c, const Frame& f, std::span<const Point> placed) {
  std::int64_t alive = 0;
  for (std::int64_t flat = 0; flat < c.region_count(); ++flat)
    if (find_alive_point(region_from_key(f, c, RegionKey::from_flat(c.p, flat)), placed)) ++alive;
  return alive;
}

inline std::int64_t alive_count(const ConstructionParams& c, std::span<const Point> placed) {
  return alive_count(c, build_frame(c), placed);
}

/// Smallest A with 17 * A * log_n^4 >= n^4.
inline std::int64_t alive_lower_bound(const ConstructionParams& c) {
  const i128 n4 = i128(c.n) * c.n * c.n * c.n;
  const i128 l4 = i128(c.log_n) * c.log_n * c.log_n * c.log_n;
  return std::int64_t(detail::ceil_div(n4, 17 * l4));
}

}  // namespace otg
