#pragma once

// SVG figure of the frame: the central square [alpha n^2, 2 alpha n^2]^2 maps
// to 1000 x 1000 units, y pointing up in grid space and down in SVG space.
// The view box covers the whole grid G at the same uniform scale.

#include <sstream>
#include <string>

#include "otg/construction.hpp"
#include "otg/exact_geom.hpp"

namespace otg {

namespace detail {

/// Signed thousandths as "[-]int.ddd".
inline std::string fixed3(i128 thousandths) {
  const bool neg = thousandths < 0;
  const u128 m = magnitude(thousandths);
  std::string frac = to_string(i128(m % 1000));
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + to_string(i128(m / 1000)) + "." + frac;
}

class SvgMapper {
 public:
  explicit SvgMapper(const ConstructionParams& c) : origin_(c.central_lo()), top_(c.central_hi()), side_(c.central_lo()) {}

  // round(v * 10^6 / side) half up, as thousandths of an SVG unit
  std::string map(const Rational& v) const {
    const i128 num = checked_mul(v.num(), 1'000'000);
    const i128 den = checked_mul(v.den(), side_);
    return fixed3(floor_div(checked_add(checked_mul(num, 2), den), checked_mul(den, 2)));
  }
  std::string x(const Rational& gx) const { return map(gx - Rational(origin_)); }
  std::string y(const Rational& gy) const { return map(Rational(top_) - gy); }
  std::string x(std::int64_t gx) const { return x(Rational(gx)); }
  std::string y(std::int64_t gy) const { return y(Rational(gy)); }

 private:
  std::int64_t origin_, top_, side_;
};

}  // namespace detail

struct SvgOptions {
  bool regions = false;
};

inline std::string render_svg(const ConstructionParams& c, const Frame& f, SvgOptions opt = {}) {
  const detail::SvgMapper map(c);
  std::ostringstream os;
  // view box: grid x and y both span [-p, m+p]
  auto svg_len = [&](std::int64_t g) { return map.map(Rational(g)); };
  const std::string min_x = map.x(c.grid_lo);
  const std::string min_y = map.y(c.grid_hi);
  const std::string extent = svg_len(c.grid_hi - c.grid_lo);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << min_x << ' ' << min_y << ' '
     << extent << ' ' << extent << "\" width=\"" << extent << "\" height=\"" << extent << "\">\n";
  os << "<!-- n=" << c.n << " p=" << c.p << " scale: " << c.central_lo()
     << " grid units = 1000 svg units; central square at (0,0)-(1000,1000) -->\n";
  os << "<style>.D{fill:#1f77b4}.U{fill:#ff7f0e}.L{fill:#2ca02c}.R{fill:#d62728}"
        ".lr,.du{stroke:#888;stroke-width:0.5}.region{fill:#9c9;fill-opacity:0.5;stroke:none}</style>\n";
  os << "<rect class=\"central\" x=\"0.000\" y=\"0.000\" width=\"1000.000\" height=\"1000.000\" "
        "fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";
  if (opt.regions) {
    os << "<g id=\"regions\">\n";
    for (std::int64_t flat = 0; flat < c.region_count(); ++flat) {
      const Region r = region_from_key(f, c, RegionKey::from_flat(c.p, flat));
      os << "<polygon class=\"region\" points=\"";
      bool first = true;
      for (const RationalPoint* v : {&r.a, &r.c, &r.dp, &r.b}) {
        os << (first ? "" : " ") << map.x(v->x) << ',' << map.y(v->y);
        first = false;
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g id=\"segments\">\n";
  for (const Point& l : f.L)
    for (const Point& r : f.R)
      os << "<line class=\"lr\" x1=\"" << map.x(l.x) << "\" y1=\"" << map.y(l.y) << "\" x2=\"" << map.x(r.x)
         << "\" y2=\"" << map.y(r.y) << "\"/>\n";
  for (const Point& d : f.D)
    for (const Point& u : f.U)
      os << "<line class=\"du\" x1=\"" << map.x(d.x) << "\" y1=\"" << map.y(d.y) << "\" x2=\"" << map.x(u.x)
         << "\" y2=\"" << map.y(u.y) << "\"/>\n";
  os << "</g>\n<g id=\"frame\">\n";
  const std::pair<const char*, const std::vector<Point>*> parts[] = {{"D", &f.D}, {"U", &f.U}, {"L", &f.L}, {"R", &f.R}};
  for (const auto& [cls, pts] : parts)
    for (const Point& q : *pts)
      os << "<circle class=\"" << cls << "\" cx=\"" << map.x(q.x) << "\" cy=\"" << map.y(q.y) << "\" r=\"6.000\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace otg
