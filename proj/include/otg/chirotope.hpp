#pragma once

// Labeled chirotopes of planar point sets, packed one bit per lexicographic
// triple (i<j<k), most significant bit first, 1 = Plus.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "otg/error.hpp"
#include "otg/exact_geom.hpp"

namespace otg {

/// Points labeled 1..n by position.
struct LabeledPointSet {
  std::vector<Point> points;

  std::size_t n() const { return points.size(); }
  const Point& at_label(std::size_t label) const { return points.at(label - 1); }

  friend bool operator==(const LabeledPointSet&, const LabeledPointSet&) = default;
};

inline std::uint64_t triple_count(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

/// Lexicographic triple for a 0-based bit index; labels are 1-based.
inline Triple unrank_triple(std::size_t n, std::uint64_t index) {
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const std::uint64_t rest = n - i;
    const std::uint64_t block = rest * (rest - 1) / 2;
    if (index < block) {
      for (std::size_t j = i + 1; j + 1 <= n; ++j) {
        const std::uint64_t row = n - j;
        if (index < row) return {i, j, j + 1 + std::size_t(index)};
        index -= row;
      }
    }
    index -= block;
  }
  throw std::out_of_range("triple index out of range");
}

/// First lexicographic collinear triple, if any.
inline std::optional<Triple> find_collinear_triple(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == Orientation::Zero) return Triple{i + 1, j + 1, k + 1};
  return std::nullopt;
}

class Chirotope {
 public:
  Chirotope(std::size_t n, std::vector<std::uint8_t> bytes) : n_(n), bytes_(std::move(bytes)) {
    const std::uint64_t bits = triple_count(n);
    if (bytes_.size() != (bits + 7) / 8) throw Error(ErrorKind::Parse, "signature length does not match n");
    if (bits % 8 != 0 && !bytes_.empty()) {
      const std::uint8_t pad_mask = std::uint8_t(0xffu >> (bits % 8));
      if ((bytes_.back() & pad_mask) != 0) throw Error(ErrorKind::Parse, "nonzero padding bits");
    }
  }

  std::size_t n() const { return n_; }
  std::uint64_t bit_count() const { return triple_count(n_); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool bit(std::uint64_t index) const { return (bytes_[index / 8] >> (7 - index % 8)) & 1u; }

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bytes_;
};

/// Throws DegenerateError (kind Degenerate) with the first collinear triple.
inline Chirotope compute_chirotope(const LabeledPointSet& s) {
  const std::size_t n = s.n();
  if (n < 3) throw Error(ErrorKind::InvalidParams, "chirotope needs at least 3 points");
  std::vector<std::uint8_t> bytes((triple_count(n) + 7) / 8, 0);
  std::uint64_t index = 0;
  const auto& p = s.points;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++index) {
        const Orientation o = orient(p[i], p[j], p[k]);
        if (o == Orientation::Zero) throw DegenerateError(ErrorKind::Degenerate, {i + 1, j + 1, k + 1});
        if (o == Orientation::Plus) bytes[index / 8] |= std::uint8_t(0x80u >> (index % 8));
      }
  return Chirotope(n, std::move(bytes));
}

/// chi(i,j,k) for any order of distinct labels: the stored value of the sorted
/// triple times the sign of the sorting permutation.
inline Orientation chirotope_orientation(const Chirotope& c, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = c.n();
  auto ok = [n](std::size_t l) { return l >= 1 && l <= n; };
  if (!ok(i) || !ok(j) || !ok(k) || i == j || j == k || i == k)
    throw Error(ErrorKind::BadLabel, "labels must be distinct and within 1.." + std::to_string(n));
  std::array<std::size_t, 3> t{i, j, k};
  int parity = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int a = 0; a < 2; ++a)
      if (t[a] > t[a + 1]) {
        std::swap(t[a], t[a + 1]);
        parity = -parity;
      }
  // rank of (t0 < t1 < t2) in lexicographic order, 0-based
  std::uint64_t rank = 0;
  for (std::size_t a = 1; a < t[0]; ++a) rank += std::uint64_t(n - a) * (n - a - 1) / 2;
  for (std::size_t b = t[0] + 1; b < t[1]; ++b) rank += n - b;
  rank += t[2] - t[1] - 1;
  const int stored = c.bit(rank) ? 1 : -1;
  return from_sign(stored * parity);
}

inline std::string signature_hex(const Chirotope& c) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = "n=" + std::to_string(c.n()) + ":";
  out.reserve(out.size() + 2 * c.bytes().size());
  for (std::uint8_t b : c.bytes()) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

inline Chirotope parse_signature(std::string_view text) {
  auto fail = [&](const char* why) { return Error(ErrorKind::Parse, std::string(why) + ": " + std::string(text)); };
  if (text.substr(0, 2) != "n=") throw fail("signature must start with n=");
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 2) throw fail("missing n or ':'");
  std::size_t n = 0;
  for (char ch : text.substr(2, colon - 2)) {
    if (ch < '0' || ch > '9') throw fail("n is not a decimal integer");
    n = n * 10 + std::size_t(ch - '0');
  }
  const std::string_view hex = text.substr(colon + 1);
  if (hex.size() % 2 != 0) throw fail("odd number of hex digits");
  auto nibble = [&](char ch) -> std::uint8_t {
    if (ch >= '0' && ch <= '9') return std::uint8_t(ch - '0');
    if (ch >= 'a' && ch <= 'f') return std::uint8_t(ch - 'a' + 10);
    throw fail("hex digits must be lowercase 0-9a-f");
  };
  std::vector<std::uint8_t> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(std::uint8_t(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return Chirotope(n, std::move(bytes));
}

/// Lexicographically first sorted triple whose bits differ.
inline std::optional<Triple> first_difference(const Chirotope& a, const Chirotope& b) {
  if (a.n() != b.n())
    throw Error(ErrorKind::SizeMismatch,
                "chirotopes on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " points");
  const auto& x = a.bytes();
  const auto& y = b.bytes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint8_t diff = x[i] ^ y[i];
    if (diff == 0) continue;
    const int lead = __builtin_clz(unsigned(diff)) - 24;
    return unrank_triple(a.n(), std::uint64_t(i) * 8 + std::uint64_t(lead));
  }
  return std::nullopt;
}

}  // namespace otg
