#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 construction error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otg/chirotope.hpp"
#include "otg/construction.hpp"
#include "otg/error.hpp"
#include "otg/io.hpp"
#include "otg/svg.hpp"
#include "otg/verify.hpp"

namespace otg::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kConstruction = 3 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoPrimeInRange:
    case ErrorKind::NTooSmall:
    case ErrorKind::RegionDead:
    case ErrorKind::FrameDegenerate:
    case ErrorKind::BoundViolation:
    case ErrorKind::ExhaustedResampling:
      return kConstruction;
    case ErrorKind::Degenerate:
    case ErrorKind::Identical:
      return kVerifyFailed;
    default:
      return kUsage;
  }
}

/// Non-negative decimal ("1", "0.25") or fraction ("3/2") as num/den.
inline std::pair<std::int64_t, std::int64_t> parse_epsilon(const std::string& s) {
  auto bad = [&] { return Error(ErrorKind::InvalidParams, "epsilon must be a non-negative decimal or fraction: " + s); };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::int64_t num = otg::detail::parse_int(s.substr(0, slash), "epsilon numerator");
    const std::int64_t den = otg::detail::parse_int(s.substr(slash + 1), "epsilon denominator");
    if (num < 0 || den <= 0) throw bad();
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }
  const auto dot = s.find('.');
  const std::string whole = s.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 6) throw bad();
  std::int64_t num = whole.empty() ? 0 : otg::detail::parse_int(whole, "epsilon");
  std::int64_t den = 1;
  for (char ch : frac) {
    if (ch < '0' || ch > '9') throw bad();
    num = num * 10 + (ch - '0');
    den *= 10;
  }
  if (num < 0) throw bad();
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace detail {

struct Options {
  std::int64_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string placement, out, in, a, b, epsilon = "1";
  std::int64_t p = 0, trials = 1;
  int frac_bits = 20;
  bool regions = false;
};

inline int cmd_gen(const Options& o, std::ostream& out) {
  if (o.seed.has_value() == !o.placement.empty())
    throw Error(ErrorKind::Usage, "gen needs exactly one of --seed or --placement");
  const ConstructionParams c = derive_params(o.n);
  PlacementVector v;
  if (o.seed) {
    v = random_placement(c, *o.seed);
  } else {
    const PlacementFile pf = with_input_file(o.placement, [](std::istream& is) { return read_placement(is); });
    if (pf.n != c.n || pf.p != c.p) throw Error(ErrorKind::Usage, "placement file is for a different n or p");
    for (const RegionKey& k : pf.entries)
      if (!k.valid(c.p)) throw Error(ErrorKind::Usage, "placement entry out of range");
    v = pf.entries;
  }
  const LabeledPointSet s = place_all(c, v);
  if (!o.out.empty()) {
    std::ostringstream os;
    write_point_set(os, s);
    write_text_file(o.out, os.str());
  }
  out << "signature=" << signature_hex(compute_chirotope(s)) << '\n' << "extras=" << c.extras() << '\n';
  return kOk;
}

inline int cmd_verify_frame(const Options& o, std::ostream& out) {
  const ConstructionParams c = derive_params(o.n);
  const VerificationReport r = verify_frame(c);
  out << r;
  return r.overall() ? kOk : kVerifyFailed;
}

inline int cmd_verify_set(const Options& o, std::ostream& out) {
  const LabeledPointSet s = with_input_file(o.in, [](std::istream& is) { return read_point_set(is); });
  const VerificationReport r = verify_point_set(s);
  out << r;
  if (!r.overall()) return kVerifyFailed;
  out << "signature=" << signature_hex(compute_chirotope(s)) << '\n';
  return kOk;
}

inline int cmd_verify_qp(const Options& o, std::ostream& out) {
  const VerificationReport r = verify_qp(o.p);
  out << r;
  return r.overall() ? kOk : kVerifyFailed;
}

inline int cmd_stats(const Options& o, std::ostream& out) {
  const ConstructionParams c = derive_params(o.n);
  const Frame f = build_frame(c);
  const RegionMeasure rm = measure_regions(c, f);
  std::vector<Point> placed = f.labeled();
  out << "n=" << c.n << "\np=" << c.p << "\nalpha=" << c.alpha << "\nm=" << c.m << "\nscale=" << c.scale
      << "\nregions=" << rm.regions << "\nregion_points_min=" << rm.min << "\nregion_points_max=" << rm.max
      << "\nregion_points_threshold=" << otg::detail::to_string(region_point_threshold(c).floor())
      << "\nalive_initial=" << alive_count(c, f, placed) << '\n';
  if (o.seed) {
    placed = place_all(c, random_placement(c, *o.seed)).points;
    out << "alive_after_placement=" << alive_count(c, f, placed) << '\n';
  }
  out << "alive_lower_bound=" << alive_lower_bound(c) << '\n'
      << "kill_max_per_line=" << measure_kills(c, f, placed).max_killed << '\n';
  return kOk;
}

inline int cmd_witness(const Options& o, std::ostream& out) {
  auto load = [](const std::string& path) {
    return with_input_file(path, [](std::istream& is) { return read_point_set(is); });
  };
  const LabeledPointSet a = load(o.a), b = load(o.b);
  const OrderTypeWitness w = find_order_type_witness(a, b);
  out << "witness=(" << w.triple[0] << ',' << w.triple[1] << ',' << w.triple[2] << ") a=" << to_char(w.in_a)
      << " b=" << to_char(w.in_b) << '\n';
  return kOk;
}

inline int cmd_svg(const Options& o, std::ostream& out) {
  const ConstructionParams c = derive_params(o.n);
  const Frame f = build_frame(c);
  write_text_file(o.out, render_svg(c, f, {o.regions}));
  out << "markers=" << 4 * c.p << "\nsegments=" << 2 * c.p * c.p << '\n';
  if (o.regions) out << "regions=" << c.region_count() << '\n';
  return kOk;
}

inline int cmd_roundexp(const Options& o, std::ostream& out) {
  const auto [num, den] = parse_epsilon(o.epsilon);
  RoundingParams rp;
  rp.n = o.n;
  rp.epsilon_num = num;
  rp.epsilon_den = den;
  rp.trials = o.trials;
  rp.seed = o.seed.value_or(0);
  rp.frac_bits = o.frac_bits;
  const RoundingResult r = rounding_experiment(rp);
  out << "side=" << r.side << "\nfrac_bits=" << rp.frac_bits << "\npreserved=" << r.preserved << '/' << r.trials
      << '\n';
  return kOk;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order types on polynomial integer grids: construction and verification", "otg"};
  app.require_subcommand(1);
  detail::Options o;
  std::optional<std::uint64_t> seed_raw;

  auto* gen = app.add_subcommand("gen", "Construct a point set from a seed or placement file");
  gen->add_option("--n", o.n, "Number of points")->required();
  auto* gseed = gen->add_option("--seed", seed_raw, "Seed for the random placement");
  auto* gplace = gen->add_option("--placement", o.placement, "Placement vector file");
  gseed->excludes(gplace);
  gen->add_option("--out", o.out, "Write the point-set file here");

  auto* verify = app.add_subcommand("verify", "Run invariant checks");
  verify->require_subcommand(1);
  auto* vframe = verify->add_subcommand("frame", "Frame invariants for a given n");
  vframe->add_option("--n", o.n)->required();
  auto* vset = verify->add_subcommand("set", "Non-degeneracy of a point-set file");
  vset->add_option("--in", o.in)->required();
  auto* vqp = verify->add_subcommand("qp", "Non-degeneracy of Q_p, two ways");
  vqp->add_option("--p", o.p)->required();

  auto* stats = app.add_subcommand("stats", "Construction constants and measured bounds");
  stats->add_option("--n", o.n)->required();
  stats->add_option("--seed", seed_raw);

  auto* witness = app.add_subcommand("witness", "First triple on which two point sets disagree");
  witness->add_option("--a", o.a)->required();
  witness->add_option("--b", o.b)->required();

  auto* svg = app.add_subcommand("svg", "Draw the frame as SVG");
  svg->add_option("--n", o.n)->required();
  svg->add_option("--out", o.out)->required();
  svg->add_flag("--regions", o.regions, "Also draw region outlines");

  auto* roundexp = app.add_subcommand("roundexp", "Rounding experiment on random point sets");
  roundexp->add_option("--n", o.n)->required();
  roundexp->add_option("--epsilon", o.epsilon)->required();
  roundexp->add_option("--trials", o.trials)->required();
  roundexp->add_option("--seed", seed_raw)->required();
  roundexp->add_option("--frac-bits", o.frac_bits, "Fixed-point fractional bits")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.seed = seed_raw;

  try {
    if (gen->parsed()) return detail::cmd_gen(o, out);
    if (vframe->parsed()) return detail::cmd_verify_frame(o, out);
    if (vset->parsed()) return detail::cmd_verify_set(o, out);
    if (vqp->parsed()) return detail::cmd_verify_qp(o, out);
    if (stats->parsed()) return detail::cmd_stats(o, out);
    if (witness->parsed()) return detail::cmd_witness(o, out);
    if (svg->parsed()) return detail::cmd_svg(o, out);
    if (roundexp->parsed()) return detail::cmd_roundexp(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace otg::cli
