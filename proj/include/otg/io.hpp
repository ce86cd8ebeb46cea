#pragma once

// Text formats:
//
//   # otg-points v1          # otg-placement v1
//   n=<n>                    n=<n> p=<p>
//   <x> <y>     (n lines)    l=<l> r=<r> d=<d> u=<u>   (n - 4p lines, 0-based)

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "otg/chirotope.hpp"
#include "otg/construction.hpp"
#include "otg/error.hpp"

namespace otg {

inline constexpr std::string_view kPointsHeader = "# otg-points v1";
inline constexpr std::string_view kPlacementHeader = "# otg-placement v1";

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Parse, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

/// Parses `<key>=<int>` exactly.
inline std::int64_t parse_field(std::string_view tok, std::string_view key) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
    throw Error(ErrorKind::Parse, "expected " + std::string(key) + "=<int>, got '" + std::string(tok) + "'");
  return parse_int(tok.substr(key.size() + 1), key);
}

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace detail

inline void write_point_set(std::ostream& os, const LabeledPointSet& s) {
  os << kPointsHeader << '\n' << "n=" << s.n() << '\n';
  for (const Point& q : s.points) os << q.x << ' ' << q.y << '\n';
}

inline LabeledPointSet read_point_set(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || detail::strip_cr(line) != kPointsHeader)
    throw Error(ErrorKind::Parse, "missing '# otg-points v1' header");
  if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "missing n= line");
  const std::int64_t n = detail::parse_field(detail::strip_cr(line), "n");
  if (n < 0) throw Error(ErrorKind::Parse, "negative n");
  LabeledPointSet s;
  s.points.reserve(std::size_t(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " point lines");
    const auto toks = detail::split_spaces(detail::strip_cr(line));
    if (toks.size() != 2) throw Error(ErrorKind::Parse, "point line must be '<x> <y>'");
    s.points.push_back({detail::parse_int(toks[0], "x"), detail::parse_int(toks[1], "y")});
  }
  while (std::getline(is, line))
    if (!detail::strip_cr(line).empty()) throw Error(ErrorKind::Parse, "trailing data after point lines");
  return s;
}

inline void write_placement(std::ostream& os, const ConstructionParams& c, const PlacementVector& v) {
  os << kPlacementHeader << '\n' << "n=" << c.n << " p=" << c.p << '\n';
  for (const RegionKey& k : v) os << "l=" << k.l_index << " r=" << k.r_gap << " d=" << k.d_index << " u=" << k.u_gap << '\n';
}

struct PlacementFile {
  std::int64_t n = 0;
  std::int64_t p = 0;
  PlacementVector entries;
};

inline PlacementFile read_placement(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || detail::strip_cr(line) != kPlacementHeader)
    throw Error(ErrorKind::Parse, "missing '# otg-placement v1' header");
  if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "missing 'n=<n> p=<p>' line");
  const auto head = detail::split_spaces(detail::strip_cr(line));
  if (head.size() != 2) throw Error(ErrorKind::Parse, "expected 'n=<n> p=<p>'");
  PlacementFile pf{detail::parse_field(head[0], "n"), detail::parse_field(head[1], "p"), {}};
  while (std::getline(is, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto t = detail::split_spaces(line);
    if (t.size() != 4) throw Error(ErrorKind::Parse, "expected 'l=.. r=.. d=.. u=..'");
    pf.entries.push_back({detail::parse_field(t[0], "l"), detail::parse_field(t[1], "r"),
                          detail::parse_field(t[2], "d"), detail::parse_field(t[3], "u")});
  }
  return pf;
}

template <class F>
auto with_input_file(const std::string& path, F&& f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return f(in);
}

inline void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::Usage, "write failed for " + path);
}

}  // namespace otg
