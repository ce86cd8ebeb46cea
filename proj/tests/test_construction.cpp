#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "otg/construction.hpp"
#include "otg/verify.hpp"

namespace otg {
namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no otg::Error thrown";
  return ErrorKind::Usage;
}

TEST(FloorLog2, Examples) {
  EXPECT_EQ(floor_log2(64), 6);
  EXPECT_EQ(floor_log2(63), 5);
  EXPECT_EQ(floor_log2(1), 0);
  EXPECT_EQ(floor_log2(1025), 10);
}

TEST(FindPrime, Examples) {
  EXPECT_EQ(find_prime(64), 7);
  EXPECT_EQ(find_prime(1024), 53);
  EXPECT_EQ(kind_of([] { find_prime(4); }), ErrorKind::NoPrimeInRange);
}

TEST(FindPrime, SmallestPrimeInsideOpenWindow) {
  for (std::int64_t n = 8; n <= 5000; ++n) {
    const std::int64_t lg = floor_log2(n);
    std::optional<std::int64_t> expect;
    for (std::int64_t q = 2; q * lg < n && !expect; ++q)
      if (2 * lg * q > n && is_prime(q)) expect = q;
    if (expect)
      ASSERT_EQ(find_prime(n), *expect) << n;
    else
      ASSERT_THROW(find_prime(n), Error) << n;
  }
}

TEST(BuildQp, Examples) {
  EXPECT_EQ(build_qp(3), (std::vector<Point>{{1, 1}, {2, 1}, {3, 3}}));
  EXPECT_EQ(build_qp(7), (std::vector<Point>{{1, 1}, {2, 4}, {3, 2}, {4, 2}, {5, 4}, {6, 1}, {7, 7}}));
  EXPECT_EQ(build_qp(2), (std::vector<Point>{{1, 1}, {2, 2}}));
  EXPECT_EQ(kind_of([] { build_qp(9); }), ErrorKind::NotPrime);
}

TEST(BuildQp, NonDegenerateTwoWaysForPrimesUpTo97) {
  for (std::int64_t p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const auto q = build_qp(p);
    ASSERT_EQ(std::int64_t(q.size()), p);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j)
        for (std::size_t k = j + 1; k < q.size(); ++k) {
          const std::int64_t a = q[i].x, b = q[j].x, c = q[k].x;
          const bool vandermonde = (b - a) * (c - a) % p * (c - b) % p != 0;
          ASSERT_TRUE(vandermonde);
          ASSERT_NE(oracle::det_sign(q[i], q[j], q[k]), 0);
        }
  }
}

TEST(DeriveParams, N64) {
  const auto c = derive_params(64);
  EXPECT_EQ(c.log_n, 6);
  EXPECT_EQ(c.p, 7);
  EXPECT_EQ(c.alpha, 128);
  EXPECT_EQ(c.scale, 49152);
  EXPECT_EQ(c.m, 34603008);
  EXPECT_EQ(c.grid_lo, -7);
  EXPECT_EQ(c.grid_hi, 34603015);
  EXPECT_EQ(c.grid_side_bound, 50331648);
  EXPECT_EQ(c.region_count(), 1764);
  EXPECT_EQ(c.extras(), 36);
}

TEST(DeriveParams, N32) {
  const auto c = derive_params(32);
  EXPECT_EQ(c.p, 5);
  EXPECT_EQ(c.alpha, 64);
  EXPECT_EQ(c.scale, 10240);
  EXPECT_EQ(c.m, 2228224);  // 64 * (2 * 32^2 + 32^3)
  EXPECT_EQ(c.region_count(), 400);
}

TEST(DeriveParams, Errors) {
  EXPECT_EQ(kind_of([] { derive_params(16); }), ErrorKind::NTooSmall);
  EXPECT_EQ(kind_of([] { derive_params(31); }), ErrorKind::NTooSmall);
}

TEST(DeriveParams, InvariantsOverRange) {
  for (std::int64_t n = 32; n <= 4096; n += 1 + n / 16) {
    ConstructionParams c;
    try {
      c = derive_params(n);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NoPrimeInRange) << n;
      continue;
    }
    EXPECT_GT(2 * c.log_n * c.p, n);
    EXPECT_LT(c.p * c.log_n, n);
    EXPECT_LE(4 * c.p, n);
    EXPECT_LE(c.m + 2 * c.p, c.grid_side_bound);
  }
}

TEST(BuildFrame, N64Coordinates) {
  const auto c = derive_params(64);
  const Frame f = build_frame(c);
  EXPECT_NE(std::find(f.D.begin(), f.D.end(), Point{573440, -6}), f.D.end());
  EXPECT_NE(std::find(f.L.begin(), f.L.end(), Point{-6, 573440}), f.L.end());
  for (std::size_t i = 0; i + 1 < f.R.size(); ++i) EXPECT_EQ(f.R[i + 1].y - f.R[i].y, 49152);
  EXPECT_EQ(f.labeled().size(), 28u);
  EXPECT_FALSE(find_collinear_triple(f.labeled()));
}

TEST(RegionKey, FlatRoundTrip) {
  for (std::int64_t p : {5, 7, 11}) {
    std::set<std::int64_t> seen;
    for (std::int64_t flat = 0; flat < (p * p - p) * (p * p - p); ++flat) {
      const RegionKey k = RegionKey::from_flat(p, flat);
      ASSERT_TRUE(k.valid(p));
      ASSERT_EQ(k.flat(p), flat);
    }
  }
}

class RegionsN64 : public ::testing::Test {
 protected:
  ConstructionParams c = derive_params(64);
  Frame f = build_frame(c);
};

TEST_F(RegionsN64, VerticesDistinctAndInsideCentralBand) {
  const Rational lo(c.central_lo() - 2 * c.alpha * c.n), hi(c.central_hi() + 2 * c.alpha * c.n);
  for (std::int64_t flat = 0; flat < c.region_count(); flat += 37) {
    const Region r = region_from_key(f, c, RegionKey::from_flat(c.p, flat));
    const std::vector<RationalPoint> v{r.a, r.b, r.c, r.dp};
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_TRUE(lo < v[i].x && v[i].x < hi && lo < v[i].y && v[i].y < hi);
      for (std::size_t j = i + 1; j < v.size(); ++j) EXPECT_NE(v[i], v[j]);
    }
    EXPECT_GT(r.a.y, r.b.y);
    EXPECT_LT(r.b.x, r.dp.x);
  }
}

TEST_F(RegionsN64, DeltaOfFirstRegion) {
  const Region r = region_from_key(f, c, {0, 0, 0, 0});
  EXPECT_EQ(r.delta(), Rational(14093008896, 17301509));
  EXPECT_GE(r.delta(), Rational(384));
  EXPECT_LE(r.delta(), Rational(1536));
}

TEST_F(RegionsN64, AliveWithFrameOnlyIsNearLeftEdge) {
  const Region r = region_from_key(f, c, {0, 0, 0, 0});
  const auto q = find_alive_point(r, f.labeled());
  ASSERT_TRUE(q);
  EXPECT_LE(q->x, r.min_x().ceil() + 1);
  EXPECT_EQ(*q, (Point{573441, 573441}));
}

TEST(RegionGridCount, FrozenCountsAtN32) {
  // brute-force box scans (tests/oracle/construction_oracle.py)
  const auto c = derive_params(32);
  const Frame f = build_frame(c);
  struct Case {
    RegionKey key;
    std::int64_t count;
    Point lexmin;
  };
  for (const Case& t : {Case{{0, 0, 0, 0}, 121477, {75777, 75777}}, Case{{4, 3, 4, 3}, 285998, {116200, 116634}},
                        Case{{2, 1, 3, 0}, 213502, {105169, 96248}}}) {
    const Region r = region_from_key(f, c, t.key);
    EXPECT_EQ(region_grid_count(r), t.count);
    auto it = iterate_region_points(r);
    EXPECT_EQ(it.next(), t.lexmin);
  }
}

TEST(RegionPoints, StreamMatchesCountOrderAndMembership) {
  const auto c = derive_params(32);
  const Frame f = build_frame(c);
  for (std::int64_t flat : {0, 57, 399}) {
    const Region r = region_from_key(f, c, RegionKey::from_flat(c.p, flat));
    std::int64_t count = 0;
    std::optional<Point> prev;
    for (Point q : iterate_region_points(r)) {
      ++count;
      if (prev) {
        ASSERT_LT(*prev, q);
      }
      prev = q;
      if (count % 97 == 0) {
        ASSERT_TRUE(r.contains(q));
      }
    }
    EXPECT_EQ(count, region_grid_count(r));
  }
}

// A 2x2 toy region: y in {1,2} between y=0 and the line (-100,0)-(100,4),
// x in {1,2} between x=0 and the line (0,-100)-(4,100).
Region toy_region() {
  return make_region({}, {{-100, 0}, {100, 0}}, {{-100, 0}, {100, 4}}, {{0, -100}, {0, 100}}, {{0, -100}, {4, 100}});
}

TEST(RegionGridCount, ToyRegionAgainstBoxScan) {
  const Region r = toy_region();
  std::vector<Point> scan;
  for (std::int64_t x = -5; x <= 8; ++x)
    for (std::int64_t y = -5; y <= 8; ++y) {
      const Point q{x, y};
      if (oracle::det_sign(r.lower.from, r.lower.to, q) == 1 && oracle::det_sign(r.upper.from, r.upper.to, q) == -1 &&
          oracle::det_sign(r.left.from, r.left.to, q) == -1 && oracle::det_sign(r.right.from, r.right.to, q) == 1)
        scan.push_back(q);
    }
  EXPECT_EQ(scan, (std::vector<Point>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(region_grid_count(r), 4);
  std::vector<Point> streamed;
  for (Point q : iterate_region_points(r)) streamed.push_back(q);
  EXPECT_EQ(streamed, scan);
}

TEST(IsKilled, Examples) {
  const std::vector<Point> diag{{0, 0}, {2, 2}};
  EXPECT_EQ(is_killed({1, 1}, diag), (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_FALSE(is_killed({1, 2}, diag));
  EXPECT_FALSE(is_killed({5, 5}, std::vector<Point>{{0, 0}}));
  EXPECT_FALSE(is_killed({5, 5}, std::vector<Point>{}));
  const std::vector<Point> many{{9, 0}, {0, 0}, {3, 7}, {2, 2}};
  EXPECT_EQ(is_killed({1, 1}, many), (std::pair<std::size_t, std::size_t>{2, 4}));
}

TEST(FindAlivePoint, EmptyPlacedAndDeadRegion) {
  const Region r = toy_region();
  EXPECT_EQ(find_alive_point(r, std::vector<Point>{}), (Point{1, 1}));
  // vertical lines x=1 and x=2 kill every candidate
  const std::vector<Point> killers{{1, 50}, {1, -50}, {2, 50}, {2, -50}};
  EXPECT_FALSE(find_alive_point(r, killers));
  const std::vector<Point> partial{{1, 50}, {1, -50}};
  EXPECT_EQ(find_alive_point(r, partial), (Point{2, 1}));
}

TEST(PlaceAll, N64RandomVector) {
  const auto c = derive_params(64);
  const PlacementVector v = random_placement(c, 1);
  ASSERT_EQ(v.size(), 36u);
  const LabeledPointSet s = place_all(c, v);
  ASSERT_EQ(s.n(), 64u);
  std::set<Point> distinct(s.points.begin(), s.points.end());
  EXPECT_EQ(distinct.size(), 64u);
  EXPECT_EQ(oracle::chirotope_bits(s.points).find('z'), std::string::npos);
  std::int64_t xmin = INT64_MAX, xmax = INT64_MIN, ymin = INT64_MAX, ymax = INT64_MIN;
  for (const Point& q : s.points) {
    EXPECT_TRUE(c.grid_lo <= q.x && q.x <= c.grid_hi && c.grid_lo <= q.y && q.y <= c.grid_hi);
    xmin = std::min(xmin, q.x), xmax = std::max(xmax, q.x), ymin = std::min(ymin, q.y), ymax = std::max(ymax, q.y);
  }
  EXPECT_LE(xmax - xmin, c.grid_side_bound);
  EXPECT_LE(ymax - ymin, c.grid_side_bound);
  // labels: frame first, then extras inside their chosen regions
  const Frame f = build_frame(c);
  EXPECT_EQ(std::vector<Point>(s.points.begin(), s.points.begin() + 28), f.labeled());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(region_from_key(f, c, v[i]).contains(s.points[28 + i]));
}

TEST(PlaceAll, WrongLengthIsUsageError) {
  const auto c = derive_params(32);
  EXPECT_EQ(kind_of([&] { place_all(c, PlacementVector(3)); }), ErrorKind::Usage);
  EXPECT_EQ(kind_of([&] { place_all(c, PlacementVector(std::size_t(c.extras()), RegionKey{9, 0, 0, 0})); }),
            ErrorKind::InvalidParams);
}

TEST(RandomPlacement, DeterministicAndSeedSensitive) {
  const auto c = derive_params(64);
  const auto a = random_placement(c, 1);
  EXPECT_EQ(a, random_placement(c, 1));
  EXPECT_NE(a, random_placement(c, 2));
  for (const RegionKey& k : a) EXPECT_LT(k.flat(c.p), 1764);
  // first draws of SplitMix64(1) mod 1764 (oracle script)
  EXPECT_EQ(a[0].flat(c.p), 149);
  EXPECT_EQ(a[1].flat(c.p), 763);
  EXPECT_EQ(a[2].flat(c.p), 750);
}

TEST(AliveCount, FrameOnlyAndMonotoneAtN32) {
  const auto c = derive_params(32);
  PlacementState st(c);
  std::int64_t prev = alive_count(c, st.frame(), st.points());
  EXPECT_EQ(prev, c.region_count());
  for (const RegionKey& k : random_placement(c, 4)) {
    ASSERT_TRUE(st.try_place(k));
    const std::int64_t now = alive_count(c, st.frame(), st.points());
    EXPECT_LE(now, prev);
    prev = now;
  }
}

TEST(AliveLowerBound, Examples) {
  EXPECT_EQ(alive_lower_bound(derive_params(64)), 762);
  EXPECT_EQ(alive_lower_bound(derive_params(32)), 99);
}

TEST(Distinctness, SingleEntryChangesFlipAFanTriple) {
  const auto c = derive_params(32);
  const PlacementVector base = random_placement(c, 8);
  const LabeledPointSet a = place_all(c, base);
  const Chirotope ca = compute_chirotope(a);
  SplitMix64 rng(99);
  for (int t = 0; t < 25; ++t) {
    PlacementVector other = base;
    const std::size_t step = std::size_t(rng.next() % other.size());
    RegionKey k;
    do k = RegionKey::from_flat(c.p, std::int64_t(rng.next() % std::uint64_t(c.region_count())));
    while (k == other[step]);
    other[step] = k;
    const LabeledPointSet b = place_all(c, other);
    EXPECT_NE(compute_chirotope(b), ca);
    const auto w = find_frame_crossing(a, b, c.p, std::size_t(4 * c.p) + step + 1);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_fan_pair((*w)[0], (*w)[1], c.p));
  }
}

}  // namespace
}  // namespace otg
