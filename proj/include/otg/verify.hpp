#pragma once

// Checkers for the construction's invariants and bounds, the order-type
// witness finder, and the rounding experiment.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "otg/chirotope.hpp"
#include "otg/construction.hpp"
#include "otg/error.hpp"
#include "otg/exact_geom.hpp"
#include "otg/splitmix.hpp"

namespace otg {

enum class CheckStatus { Pass, Fail, Report };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Report: return "report";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Report;
  std::string measured;
  std::string bound;
  std::string witness;  // optional, printed only when non-empty
};

struct VerificationReport {
  std::vector<Check> checks;

  void hard(std::string name, bool ok, std::string measured, std::string bound, std::string witness = {}) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(measured),
                      std::move(bound), std::move(witness)});
  }
  void report(std::string name, std::string measured, std::string bound) {
    checks.push_back({std::move(name), CheckStatus::Report, std::move(measured), std::move(bound), {}});
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool overall() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  friend std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
    for (const auto& c : r.checks) {
      os << "check=" << c.name << " status=" << to_string(c.status) << " measured=" << c.measured
         << " bound=" << c.bound;
      if (!c.witness.empty()) os << " witness=" << c.witness;
      os << '\n';
    }
    return os;
  }
};

namespace detail {

inline std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

template <class T>
std::string str(T v) {
  if constexpr (std::is_same_v<T, i128>)
    return to_string(v);
  else
    return std::to_string(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Q_p

inline VerificationReport verify_qp(std::int64_t p) {
  const std::vector<Point> q = build_qp(p);
  std::int64_t geometric = 0, algebraic = 0, agree = 0, total = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      for (std::size_t k = j + 1; k < q.size(); ++k) {
        ++total;
        const bool geo = orient(q[i], q[j], q[k]) != Orientation::Zero;
        const std::int64_t a = q[i].x, b = q[j].x, c = q[k].x;
        const bool alg = ((b - a) % p) * ((c - a) % p) % p * ((c - b) % p) % p != 0;
        geometric += geo;
        algebraic += alg;
        agree += geo == alg;
      }
  VerificationReport r;
  const std::string t = std::to_string(total);
  r.hard("qp_geometric_nondegenerate", geometric == total, std::to_string(geometric), t);
  r.hard("qp_vandermonde_mod_p", algebraic == total, std::to_string(algebraic), t);
  r.hard("qp_oracles_agree", agree == total, std::to_string(agree), t);
  return r;
}

// ---------------------------------------------------------------------------
// Frame

namespace detail {

/// y of the line through a, b (a.x != b.x) at abscissa x.
inline Rational line_y_at(Point a, Point b, i128 x) {
  const i128 dx = i128(b.x) - a.x;
  return Rational(checked_add(checked_mul(a.y, dx), checked_mul(i128(b.y) - a.y, checked_sub(x, a.x))), dx);
}

inline Rational line_x_at(Point a, Point b, i128 y) {
  const i128 dy = i128(b.y) - a.y;
  return Rational(checked_add(checked_mul(a.x, dy), checked_mul(i128(b.x) - a.x, checked_sub(y, a.y))), dy);
}

/// Every intersection of a horizontal fan line (L[l], R[r]) with a vertical
/// fan line (D[d], U[u]); region vertices are exactly these points.
class VertexTable {
 public:
  explicit VertexTable(const Frame& f) : p_(f.D.size()), v_(p_ * p_ * p_ * p_) {
    for (std::size_t l = 0; l < p_; ++l)
      for (std::size_t r = 0; r < p_; ++r)
        for (std::size_t d = 0; d < p_; ++d)
          for (std::size_t u = 0; u < p_; ++u)
            v_[index(l, r, d, u)] = intersect_lines(f.L[l], f.R[r], f.D[d], f.U[u]);
  }

  const RationalPoint& at(std::size_t l, std::size_t r, std::size_t d, std::size_t u) const {
    return v_[index(l, r, d, u)];
  }
  const std::vector<RationalPoint>& all() const { return v_; }

 private:
  std::size_t index(std::size_t l, std::size_t r, std::size_t d, std::size_t u) const {
    return ((l * p_ + r) * p_ + d) * p_ + u;
  }
  std::size_t p_;
  std::vector<RationalPoint> v_;
};

/// Checks that every point of `points` and every vertex lies strictly on side
/// `want` of each line through a pair of `copy` (pairs taken in copy order).
/// Vertices are first tested through the corners of their bounding box; a
/// pair whose box test fails falls back to testing each vertex.
inline Check separation_check(std::string name, std::span<const Point> copy, std::span<const Point> points,
                              const VertexTable& vt, Orientation want) {
  Rational xlo = vt.all().front().x, xhi = xlo, ylo = vt.all().front().y, yhi = ylo;
  for (const auto& v : vt.all()) {
    xlo = std::min(xlo, v.x);
    xhi = std::max(xhi, v.x);
    ylo = std::min(ylo, v.y);
    yhi = std::max(yhi, v.y);
  }
  const RationalPoint corners[] = {{xlo, ylo}, {xlo, yhi}, {xhi, ylo}, {xhi, yhi}};
  std::int64_t pairs = 0, good = 0;
  std::string witness;
  for (std::size_t i = 0; i < copy.size(); ++i)
    for (std::size_t j = i + 1; j < copy.size(); ++j) {
      ++pairs;
      bool ok = std::all_of(points.begin(), points.end(),
                            [&](const Point& q) { return orient(copy[i], copy[j], q) == want; });
      if (ok) {
        const bool box = std::all_of(std::begin(corners), std::end(corners),
                                     [&](const RationalPoint& q) { return orient_hom(copy[i], copy[j], q) == want; });
        if (!box)
          ok = std::all_of(vt.all().begin(), vt.all().end(),
                           [&](const RationalPoint& q) { return orient_hom(copy[i], copy[j], q) == want; });
      }
      if (ok)
        ++good;
      else if (witness.empty())
        witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return {std::move(name), good == pairs ? CheckStatus::Pass : CheckStatus::Fail, std::to_string(good),
          std::to_string(pairs), witness};
}

inline std::vector<Point> concat(std::initializer_list<const std::vector<Point>*> parts) {
  std::vector<Point> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace detail

/// Runs every frame invariant against an explicit frame; failures are
/// recorded, never thrown.
inline VerificationReport verify_frame(const ConstructionParams& c, const Frame& f) {
  using detail::str;
  VerificationReport rep;
  const std::int64_t p = c.p, lo = c.central_lo(), hi = c.central_hi();
  const auto up = std::size_t(p);

  // coordinate ranges
  {
    std::int64_t bad = 0;
    auto in = [](std::int64_t v, std::int64_t a, std::int64_t b) { return a <= v && v <= b; };
    for (const Point& q : f.D) bad += !(in(q.x, lo, hi) && in(q.y, -p + 1, 0));
    for (const Point& q : f.U) bad += !(in(q.x, lo, hi) && in(q.y, c.m + 1, c.m + p));
    for (const Point& q : f.L) bad += !(in(q.y, lo, hi) && in(q.x, -p + 1, 0));
    for (const Point& q : f.R) bad += !(in(q.y, lo, hi) && in(q.x, c.m + 1, c.m + p));
    const bool sizes = f.D.size() == up && f.U.size() == up && f.L.size() == up && f.R.size() == up;
    rep.hard("frame_ranges", sizes && bad == 0, str(4 * p - bad), str(4 * p));
  }
  // spacing
  {
    std::int64_t ok = 0, total = 0;
    for (std::size_t i = 0; i + 1 < up; ++i) {
      ok += f.D[i + 1].x - f.D[i].x == c.scale;
      ok += f.U[i + 1].x - f.U[i].x == c.scale;
      ok += f.L[i + 1].y - f.L[i].y == c.scale;
      ok += f.R[i + 1].y - f.R[i].y == c.scale;
      total += 4;
    }
    rep.hard("frame_spacing", ok == total, str(ok), str(total));
  }
  // slopes below 1/n
  {
    std::int64_t lr = 0, du = 0;
    for (const Point& l : f.L)
      for (const Point& r : f.R) lr += i128(std::abs(r.y - l.y)) * c.n < i128(r.x - l.x);
    for (const Point& d : f.D)
      for (const Point& u : f.U) du += i128(std::abs(u.x - d.x)) * c.n < i128(u.y - d.y);
    rep.hard("slope_lr", lr == p * p, str(lr), str(p * p));
    rep.hard("slope_du", du == p * p, str(du), str(p * p));
  }

  const detail::VertexTable vt(f);
  {
    using detail::concat;
    using detail::separation_check;
    rep.checks.push_back(separation_check("separation_d_above", f.D, concat({&f.U, &f.L, &f.R}), vt, Orientation::Plus));
    rep.checks.push_back(separation_check("separation_u_below", f.U, concat({&f.D, &f.L, &f.R}), vt, Orientation::Minus));
    rep.checks.push_back(separation_check("separation_l_right", f.L, concat({&f.D, &f.U, &f.R}), vt, Orientation::Minus));
    rep.checks.push_back(separation_check("separation_r_left", f.R, concat({&f.D, &f.U, &f.L}), vt, Orientation::Plus));
  }

  // vertices inside the central square widened by 2*alpha*n per side
  const i128 band_lo = lo - 2 * c.alpha * c.n, band_hi = hi + 2 * c.alpha * c.n;
  {
    std::int64_t inside = 0;
    const Rational blo(band_lo), bhi(band_hi);
    for (const auto& v : vt.all()) inside += blo < v.x && v.x < bhi && blo < v.y && v.y < bhi;
    rep.hard("vertices_in_central_band", inside == std::int64_t(vt.all().size()), str(inside),
             str(vt.all().size()));
  }

  // fans: consecutive lines ordered, strips of distinct apexes disjoint over the band
  {
    std::int64_t ordered = 0;
    for (std::size_t a = 0; a < up; ++a)
      for (std::size_t g = 0; g + 1 < up; ++g) {
        ordered += orient(f.L[a], f.R[g], f.R[g + 1]) == Orientation::Plus;
        ordered += orient(f.D[a], f.U[g], f.U[g + 1]) == Orientation::Minus;
      }
    rep.hard("fan_order", ordered == 2 * p * (p - 1), str(ordered), str(2 * p * (p - 1)));

    auto strip_extents = [&](const std::vector<Point>& apexes, const std::vector<Point>& ends, bool horizontal) {
      std::vector<std::pair<Rational, Rational>> ext;
      for (const Point& a : apexes) {
        std::optional<Rational> mn, mx;
        for (const Point& e : ends)
          for (i128 t : {band_lo, band_hi}) {
            const Rational v = horizontal ? detail::line_y_at(a, e, t) : detail::line_x_at(a, e, t);
            if (!mn || v < *mn) mn = v;
            if (!mx || v > *mx) mx = v;
          }
        ext.emplace_back(*mn, *mx);
      }
      return ext;
    };
    auto disjoint = [](const std::vector<std::pair<Rational, Rational>>& ext) {
      std::int64_t ok = 0;
      for (std::size_t i = 0; i + 1 < ext.size(); ++i) ok += ext[i].second < ext[i + 1].first;
      return ok;
    };
    const auto h = strip_extents(f.L, f.R, true);
    const auto v = strip_extents(f.D, f.U, false);
    rep.hard("fan_disjoint_horizontal", disjoint(h) == p - 1, str(disjoint(h)), str(p - 1));
    rep.hard("fan_disjoint_vertical", disjoint(v) == p - 1, str(disjoint(v)), str(p - 1));
  }

  // frame non-degeneracy, brute force
  {
    const auto w = find_collinear_triple(f.labeled());
    rep.hard("frame_nondegenerate", !w, w ? "degenerate" : str(triple_count(4 * std::uint64_t(p))),
             str(triple_count(4 * std::uint64_t(p))), w ? detail::triple_str(*w) : "");
  }

  // region count and delta
  {
    std::int64_t regions = 0;
    // differences of vertex ordinates can exceed 128 bits from n = 128 on
    using boost::multiprecision::cpp_rational;
    auto big = [](const Rational& r) { return cpp_rational(boost::multiprecision::cpp_int(r.num()), r.den()); };
    std::optional<cpp_rational> dmin, dmax;
    for (std::size_t l = 0; l < up; ++l)
      for (std::size_t g = 0; g + 1 < up; ++g)
        for (std::size_t d = 0; d < up; ++d)
          for (std::size_t ug = 0; ug + 1 < up; ++ug) {
            ++regions;
            const cpp_rational delta = big(vt.at(l, g + 1, d, ug).y) - big(vt.at(l, g, d, ug).y);
            if (!dmin || delta < *dmin) dmin = delta;
            if (!dmax || delta > *dmax) dmax = delta;
          }
    rep.hard("region_count", regions == c.region_count(), str(regions), str(c.region_count()));
    const Rational half(c.alpha * c.log_n, 2), twice(2 * c.alpha * c.log_n);
    rep.report("delta_min", dmin->str(), half.str());
    rep.report("delta_max", dmax->str(), twice.str());
  }
  return rep;
}

inline VerificationReport verify_frame(const ConstructionParams& c) { return verify_frame(c, build_frame_unchecked(c)); }

// ---------------------------------------------------------------------------
// Point sets

/// Non-degeneracy of a single set; witness carries the first collinear triple.
inline VerificationReport verify_point_set(const LabeledPointSet& s) {
  VerificationReport rep;
  rep.hard("point_count", s.n() >= 3, std::to_string(s.n()), "3");
  const auto w = find_collinear_triple(s.points);
  const std::string total = std::to_string(triple_count(s.n()));
  rep.hard("nondegenerate", !w, w ? "degenerate" : total, total, w ? detail::triple_str(*w) : "");
  return rep;
}

/// Pass iff all signatures differ pairwise; the first duplicate pair (1-based
/// set indices) is the witness.
inline VerificationReport verify_distinct(std::span<const LabeledPointSet> sets) {
  std::vector<Chirotope> chis;
  chis.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].n() != sets.front().n()) throw Error(ErrorKind::SizeMismatch, "sets differ in size");
    try {
      chis.push_back(compute_chirotope(sets[i]));
    } catch (const DegenerateError& e) {
      throw DegenerateError(ErrorKind::Degenerate, e.witness(), i + 1);
    }
  }
  std::vector<std::size_t> order(chis.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const auto& x = chis[a].bytes();
    const auto& y = chis[b].bytes();
    const auto [ix, iy] = std::mismatch(x.begin(), x.end(), y.begin(), y.end());
    if (ix == x.end() || iy == y.end()) return ix == x.end() && iy == y.end() ? a < b : ix == x.end();
    return *ix < *iy;
  };
  std::sort(order.begin(), order.end(), less);
  std::optional<std::pair<std::size_t, std::size_t>> dup;
  std::size_t distinct = chis.empty() ? 0 : 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (chis[order[i]] == chis[order[i - 1]]) {
      const std::pair<std::size_t, std::size_t> pr{std::min(order[i - 1], order[i]) + 1,
                                                  std::max(order[i - 1], order[i]) + 1};
      if (!dup || pr < *dup) dup = pr;
    } else {
      ++distinct;
    }
  }
  VerificationReport rep;
  rep.hard("distinct_signatures", !dup, std::to_string(distinct), std::to_string(sets.size()),
           dup ? "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")" : "");
  return rep;
}

struct OrderTypeWitness {
  Triple triple;
  Orientation in_a;
  Orientation in_b;
};

inline OrderTypeWitness find_order_type_witness(const LabeledPointSet& a, const LabeledPointSet& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "sets differ in size");
  const Chirotope ca = compute_chirotope(a);
  const Chirotope cb = compute_chirotope(b);
  const auto t = first_difference(ca, cb);
  if (!t) throw Error(ErrorKind::Identical, "the two sets have the same order type");
  return {*t, chirotope_orientation(ca, (*t)[0], (*t)[1], (*t)[2]),
          chirotope_orientation(cb, (*t)[0], (*t)[1], (*t)[2])};
}

/// First triple (i, j, k) with i < j <= 4p < k = `extra` on which the two
/// construction outputs disagree: the frame line (i, j) separates the two
/// positions of the extra point.
inline std::optional<Triple> find_frame_crossing(const LabeledPointSet& a, const LabeledPointSet& b,
                                                 std::int64_t p, std::size_t extra) {
  const auto frame = std::size_t(4 * p);
  for (std::size_t i = 1; i <= frame; ++i)
    for (std::size_t j = i + 1; j <= frame; ++j)
      if (orient(a.at_label(i), a.at_label(j), a.at_label(extra)) !=
          orient(b.at_label(i), b.at_label(j), b.at_label(extra)))
        return Triple{i, j, extra};
  return std::nullopt;
}

/// True when labels i < j are both in D∪U (1..2p) or both in L∪R (2p+1..4p).
inline bool is_fan_pair(std::size_t i, std::size_t j, std::int64_t p) {
  const auto half = std::size_t(2 * p), frame = std::size_t(4 * p);
  return (j <= half) || (i > half && j <= frame);
}

// ---------------------------------------------------------------------------
// Region statistics

struct RegionMeasure {
  std::int64_t regions = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
  i128 total = 0;
};

inline RegionMeasure measure_regions(const ConstructionParams& c, const Frame& f) {
  RegionMeasure m;
  for (std::int64_t flat = 0; flat < c.region_count(); ++flat) {
    const std::int64_t k = region_grid_count(region_from_key(f, c, RegionKey::from_flat(c.p, flat)));
    if (m.regions == 0 || k < m.min) m.min = k;
    if (m.regions == 0 || k > m.max) m.max = k;
    m.total += k;
    ++m.regions;
  }
  return m;
}

/// (alpha * log_n)^2 / 5
inline Rational region_point_threshold(const ConstructionParams& c) {
  const i128 al = i128(c.alpha) * c.log_n;
  return Rational(al * al, 5);
}

/// n values where the asymptotic region-point bound is asserted.
inline bool region_bound_is_hard(std::int64_t n) { return n == 64 || n == 128; }

inline VerificationReport region_stats(const ConstructionParams& c) {
  const Frame f = build_frame(c);
  const RegionMeasure m = measure_regions(c, f);
  const Rational thr = region_point_threshold(c);
  VerificationReport rep;
  rep.hard("region_count", m.regions == c.region_count(), std::to_string(m.regions), std::to_string(c.region_count()));
  const std::string floor_thr = detail::to_string(thr.floor());
  if (region_bound_is_hard(c.n))
    rep.hard("region_points_min", Rational(m.min) >= thr, std::to_string(m.min), floor_thr);
  else
    rep.report("region_points_min", std::to_string(m.min), floor_thr);
  rep.report("region_points_max", std::to_string(m.max), "-");
  rep.report("region_points_mean", Rational(m.total, m.regions).str(), "-");
  rep.report("region_points_threshold", thr.str(), floor_thr);
  const i128 square = i128(c.central_lo() + 1) * (c.central_lo() + 1);
  rep.hard("region_points_total", m.total <= square, detail::to_string(m.total), detail::to_string(square));
  return rep;
}

// ---------------------------------------------------------------------------
// Kill accounting

/// Region containing q, if any.
inline std::optional<RegionKey> locate_region(const Frame& f, Point q) {
  const std::size_t p = f.D.size();
  RegionKey key;
  bool found = false;
  for (std::size_t l = 0; l < p && !found; ++l) {
    if (orient(f.L[l], f.R.front(), q) != Orientation::Plus || orient(f.L[l], f.R.back(), q) != Orientation::Minus)
      continue;
    for (std::size_t g = 0; g + 1 < p; ++g) {
      if (orient(f.L[l], f.R[g], q) == Orientation::Plus && orient(f.L[l], f.R[g + 1], q) == Orientation::Minus) {
        key.l_index = std::int64_t(l);
        key.r_gap = std::int64_t(g);
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;
  for (std::size_t d = 0; d < p; ++d) {
    if (orient(f.D[d], f.U.front(), q) != Orientation::Minus || orient(f.D[d], f.U.back(), q) != Orientation::Plus)
      continue;
    for (std::size_t g = 0; g + 1 < p; ++g)
      if (orient(f.D[d], f.U[g], q) == Orientation::Minus && orient(f.D[d], f.U[g + 1], q) == Orientation::Plus) {
        key.d_index = std::int64_t(d);
        key.u_gap = std::int64_t(g);
        return key;
      }
  }
  return std::nullopt;
}

/// Lattice points of line(a, b) inside the square [lo, hi]^2, as the first and
/// last such point; nullopt when there are none.
inline std::optional<std::pair<Point, Point>> clip_line_lattice(Point a, Point b, std::int64_t lo, std::int64_t hi) {
  const std::int64_t dx = b.x - a.x, dy = b.y - a.y;
  const std::int64_t g = std::gcd(dx, dy);
  if (g == 0) return std::nullopt;
  const std::int64_t sx = dx / g, sy = dy / g;
  i128 tmin = std::numeric_limits<std::int64_t>::min(), tmax = std::numeric_limits<std::int64_t>::max();
  auto clamp = [&](std::int64_t base, std::int64_t step) {
    if (step == 0) {
      if (base < lo || base > hi) tmin = 1, tmax = 0;
      return;
    }
    i128 t1 = detail::ceil_div(i128(lo) - base, step), t2 = detail::floor_div(i128(hi) - base, step);
    if (step < 0) t1 = detail::ceil_div(i128(hi) - base, step), t2 = detail::floor_div(i128(lo) - base, step);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
  };
  clamp(a.x, sx);
  clamp(a.y, sy);
  if (tmin > tmax) return std::nullopt;
  return std::pair{Point{std::int64_t(a.x + tmin * sx), std::int64_t(a.y + tmin * sy)},
                   Point{std::int64_t(a.x + tmax * sx), std::int64_t(a.y + tmax * sy)}};
}

struct KillMeasure {
  std::int64_t lines = 0;
  std::int64_t max_in_square = 0;   // lattice points of one line inside the central square
  std::int64_t max_killed = 0;      // of those, points interior to some region
  std::int64_t total_killed = 0;    // summed over lines
};

inline KillMeasure measure_kills(const ConstructionParams& c, const Frame& f, std::span<const Point> placed) {
  KillMeasure km;
  for (std::size_t i = 0; i < placed.size(); ++i)
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      ++km.lines;
      const auto seg = clip_line_lattice(placed[i], placed[j], c.central_lo(), c.central_hi());
      if (!seg) continue;
      const auto pts = segment_lattice_points(seg->first, seg->second);
      std::int64_t killed = 0;
      for (const Point& q : pts) killed += locate_region(f, q).has_value();
      km.max_in_square = std::max(km.max_in_square, std::int64_t(pts.size()));
      km.max_killed = std::max(km.max_killed, killed);
      km.total_killed += killed;
    }
  return km;
}

inline VerificationReport kill_stats(const ConstructionParams& c, std::span<const Point> placed) {
  const Frame f = build_frame(c);
  const KillMeasure km = measure_kills(c, f, placed);
  const std::int64_t side = c.central_lo();  // alpha n^2
  VerificationReport rep;
  const std::size_t k = placed.size();
  rep.report("kill_lines", std::to_string(km.lines), std::to_string(k < 2 ? 0 : k * (k - 1) / 2));
  rep.hard("kill_max_points_per_line", km.max_in_square <= side + 1, std::to_string(km.max_in_square),
           std::to_string(side + 1));
  rep.hard("kill_max_per_line", km.max_killed <= side, std::to_string(km.max_killed), std::to_string(side));
  rep.report("kill_total", std::to_string(km.total_killed), "-");
  return rep;
}

// ---------------------------------------------------------------------------
// Rounding experiment

struct RoundingParams {
  std::int64_t n = 0;
  std::int64_t epsilon_num = 0;  // epsilon = epsilon_num / epsilon_den
  std::int64_t epsilon_den = 1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int frac_bits = 20;
};

struct RoundingResult {
  std::int64_t preserved = 0;
  std::int64_t trials = 0;
  std::int64_t side = 0;  // N = floor(n^(3 + epsilon))

  friend bool operator==(const RoundingResult&, const RoundingResult&) = default;
};

/// floor(n^(3 + num/den)): the largest N with N^den <= n^(3 den + num).
inline std::int64_t rounding_side(std::int64_t n, std::int64_t num, std::int64_t den) {
  using boost::multiprecision::cpp_int;
  const cpp_int target = boost::multiprecision::pow(cpp_int(n), unsigned(3 * den + num));
  std::int64_t lo = 0, hi = std::int64_t(1) << 43;
  if (boost::multiprecision::pow(cpp_int(hi), unsigned(den)) <= target)
    throw Error(ErrorKind::InvalidParams, "n^(3+epsilon) exceeds 2^43");
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (boost::multiprecision::pow(cpp_int(mid), unsigned(den)) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Samples n fixed-point points uniformly from [0, N]^2 at resolution
/// 2^-frac_bits, rounds each coordinate to the nearest integer (ties up) and
/// counts trials whose rounded set keeps every orientation. Trial t draws from
/// SplitMix64(seed + t); degenerate samples are redrawn from the same stream.
inline RoundingResult rounding_experiment(const RoundingParams& rp) {
  if (rp.n < 3 || rp.trials < 1 || rp.epsilon_num < 0 || rp.epsilon_den < 1 || rp.frac_bits < 0 ||
      rp.frac_bits > 20 || rp.epsilon_den > 64 || rp.epsilon_num > 64 * rp.epsilon_den)
    throw Error(ErrorKind::InvalidParams, "rounding parameters out of range");
  RoundingResult res;
  res.trials = rp.trials;
  res.side = rounding_side(rp.n, rp.epsilon_num, rp.epsilon_den);
  if ((res.side >> (62 - rp.frac_bits)) != 0) throw Error(ErrorKind::InvalidParams, "fixed-point range exceeds 2^62");
  const std::uint64_t max_num = std::uint64_t(res.side) << rp.frac_bits;
  const std::int64_t half = rp.frac_bits == 0 ? 0 : std::int64_t(1) << (rp.frac_bits - 1);
  const auto n = std::size_t(rp.n);
  std::vector<Point> orig(n), rounded(n);
  for (std::int64_t t = 0; t < rp.trials; ++t) {
    SplitMix64 rng(rp.seed + std::uint64_t(t));
    do {
      for (auto& q : orig)
        q = {std::int64_t(rng.uniform_inclusive(max_num)), std::int64_t(rng.uniform_inclusive(max_num))};
    } while (find_collinear_triple(orig));
    for (std::size_t i = 0; i < n; ++i)
      rounded[i] = {(orig[i].x + half) >> rp.frac_bits, (orig[i].y + half) >> rp.frac_bits};
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i)
      for (std::size_t j = i + 1; j < n && same; ++j)
        for (std::size_t k = j + 1; k < n && same; ++k)
          same = orient(orig[i], orig[j], orig[k]) == orient(rounded[i], rounded[j], rounded[k]);
    res.preserved += same;
  }
  return res;
}

}  // namespace otg
