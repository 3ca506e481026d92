// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "palrat/json_io.hpp"
#include "palrat/moebius.hpp"

namespace palrat::cli {
namespace {

using io::Json;

Json load(const std::string& path) {
  if (path != "-") return io::read_file(path);
  std::string text(std::istreambuf_iterator<char>(std::cin), {});
  return io::parse(text);
}

// Accepts the bare object or the output of another subcommand.
RationalMatrix load_rational(const std::string& path) {
  Json j = load(path);
  if (j.is_object() && j.contains("R")) j = j["R"];
  return io::decode_rational(j);
}

Pencil load_pencil(const std::string& path) {
  Json j = load(path);
  if (j.is_object() && j.contains("pencil")) j = j["pencil"];
  return io::decode_pencil(j);
}

Complex parse_complex(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw io::FormatError("cannot read complex number \"" + text + "\"");
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw io::FormatError("cannot read complex number \"" + text + "\"");
  return {re, im};
}

MoebiusMap parse_map(const std::string& name, Complex alpha) {
  if (name == "T") return MoebiusMap::cayley();
  if (name == "B") return MoebiusMap::bilinear();
  return MoebiusMap::general(alpha);
}

struct Settings {
  std::string input;
  std::string second;
  std::string kind = "hermitian";
  std::string method = "pfd";
  std::string map = "Balpha";
  std::string alpha;
  std::string point = "-1";
  std::string target = "R";
  double tol = 1e-8;
  double rank_tol = kRankTol;
  double band = kDefaultBand;
  std::uint64_t seed = 1;
  Index n = 0;
  Index m = 1;
  int rank = -1;
  bool off_circle = false;
};

ParaKind kind_of(const Settings& s) {
  try {
    return para_kind_from_string(s.kind);
  } catch (const Error& e) {
    throw io::FormatError(e.what());
  }
}

Json do_generate(const Settings& s) {
  GeneratorOptions opts;
  opts.off_circle = s.off_circle;
  const Complex alpha = s.alpha.empty() ? Complex(1.0) : parse_complex(s.alpha);
  return io::encode(random_para_structured(s.n, s.m, alpha, kind_of(s), s.seed, opts));
}

Json do_decompose(const Settings& s) {
  const RationalMatrix r = load_rational(s.input);
  const StabilitySplit split = split_stability(r, s.band);
  Json out = {{"split", io::encode(split)},
              {"symmetry", io::encode(check_split_symmetry(split, kind_of(s)))}};
  try {
    out["alpha"] = io::encode(pick_alpha(r, 64, s.seed));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoAlphaFound) throw;
    out["alpha"] = nullptr;
  }
  return out;
}

Json do_realize(const Settings& s) {
  const RationalMatrix r = load_rational(s.input);
  const StabilitySplit split = split_stability(r, s.band);
  return io::encode(minimal_realization(split.r_in, s.rank_tol));
}

Json do_linearize(const Settings& s) {
  const RationalMatrix r = load_rational(s.input);
  const ParaKind kind = kind_of(s);
  LinearizeOptions opts;
  opts.band = s.band;
  opts.rank_tol = s.rank_tol;
  Complex weight = 1.0;
  Pencil l;
  if (s.method == "split") {
    l = linearize_stable_split(r, kind, opts);
  } else if (s.method == "taylor") {
    l = linearize_taylor(r, kind, opts);
  } else if (s.method == "pfd") {
    l = linearize_pfd(r, kind, opts);
  } else if (s.method == "laurent") {
    l = linearize_laurent(r, kind, opts);
  } else if (s.method == "moebius" || s.method == "unit") {
    if (s.second.empty()) throw io::FormatError("--s is required for method " + s.method);
    const Pencil sp = load_pencil(s.second);
    if (s.method == "unit") {
      l = linearize_with_unit_part(r, sp, kind, opts);
    } else {
      const MoebiusMap map = parse_map(s.map, s.alpha.empty() ? Complex(1.0) : parse_complex(s.alpha));
      l = linearize_via_moebius(r, sp, map, opts);
      weight = map.weight_alpha();
    }
  } else {
    throw io::FormatError("unknown method " + s.method);
  }
  CertifyOptions copts;
  copts.seed = s.seed;
  copts.rank_tol = s.tol;
  copts.pair_tol = s.tol;
  return {{"pencil", io::encode(l)},
          {"kind", to_string(kind)},
          {"method", s.method},
          {"weight_alpha", io::encode(weight)},
          {"certificate", io::encode(certify(l, r, kind, weight, copts))}};
}

Json do_eigs(const Settings& s) {
  const Pencil l = load_pencil(s.input);
  EigenOptions opts;
  opts.rank_tol = s.tol;
  const auto eigs = generalized_eigenvalues(l.M1, l.M0, opts);
  return {{"eigenvalues", io::encode(eigs)},
          {"symmetry", io::encode(symmetry_report(flatten(eigs), s.tol))}};
}

Json do_orders(const Settings& s) {
  const Pencil l = load_pencil(s.input);
  OrderPoint point;
  if (s.point == "-1") {
    point = OrderPoint::minus_one;
  } else if (s.point == "inf") {
    point = OrderPoint::infinity;
  } else {
    throw io::FormatError("--point must be -1 or inf");
  }
  if (s.target != "H" && s.target != "R") throw io::FormatError("--target must be H or R");
  const OrderTarget target = s.target == "H" ? OrderTarget::of_h : OrderTarget::of_r;
  const int rank = s.rank >= 0 ? s.rank : static_cast<int>(transfer_normal_rank(l, s.tol));
  const ExtComplex at = point == OrderPoint::minus_one ? ExtComplex(-1.0) : ExtComplex::infinity();
  return {{"normal_rank", rank},
          {"state_block", io::encode(partial_multiplicities(l.state_pencil(), at, s.tol))},
          {"pencil", io::encode(partial_multiplicities(l, at, s.tol))},
          {"orders", io::encode(invariant_orders(l, rank, point, target, s.tol))}};
}

Json do_verify(const Settings& s, bool& ok) {
  const Pencil l = load_pencil(s.input);
  const RationalMatrix r = load_rational(s.second);
  CertifyOptions copts;
  copts.seed = s.seed;
  copts.rank_tol = s.tol;
  copts.pair_tol = s.tol;
  const Complex alpha = s.alpha.empty() ? Complex(1.0) : parse_complex(s.alpha);
  const Certificate c = certify(l, r, kind_of(s), alpha, copts);
  ok = c.ok();
  return {{"ok", ok}, {"certificate", io::encode(c)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured linearizations of para-Hermitian rational matrices", "palrat"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&s](CLI::App* sub) {
    sub->add_option("--tol", s.tol, "Rank and pairing tolerance")->capture_default_str();
    sub->add_option("--band", s.band, "Unit-circle band for pole classification")->capture_default_str();
    sub->add_option("--seed", s.seed, "Random seed")->capture_default_str();
    sub->add_option("--kind", s.kind, "hermitian or skew")
        ->check(CLI::IsMember({"hermitian", "skew"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("generate", "Random para-Hermitian instance and its pencil");
  add_common(gen);
  gen->add_option("--n", s.n, "State size")->required();
  gen->add_option("--m", s.m, "Input/output size")->required();
  gen->add_option("--alpha", s.alpha, "Weight parameter as re,im");
  gen->add_flag("--off-circle", s.off_circle, "Poles in reciprocal pairs off the unit circle");

  auto* dec = app.add_subcommand("decompose", "Stable / anti-stable / unit-circle split");
  add_common(dec);
  dec->add_option("input", s.input, "RationalMatrix JSON ('-' for stdin)")->required();

  auto* rea = app.add_subcommand("realize", "Minimal realization of the stable part");
  add_common(rea);
  rea->add_option("input", s.input, "RationalMatrix JSON ('-' for stdin)")->required();
  rea->add_option("--rank-tol", s.rank_tol, "Hankel rank tolerance")->capture_default_str();

  auto* lin = app.add_subcommand("linearize", "Palindromic strongly minimal linearization");
  add_common(lin);
  lin->add_option("input", s.input, "RationalMatrix JSON ('-' for stdin)")->required();
  lin->add_option("--method", s.method, "Construction route")
      ->check(CLI::IsMember({"split", "taylor", "pfd", "laurent", "moebius", "unit"}))
      ->capture_default_str();
  lin->add_option("--rank-tol", s.rank_tol, "Hankel and compression rank tolerance")
      ->capture_default_str();
  lin->add_option("--s", s.second, "Linearization S of the transformed matrix (moebius, unit)");
  lin->add_option("--map", s.map, "T, B or Balpha")
      ->check(CLI::IsMember({"T", "B", "Balpha"}))
      ->capture_default_str();
  lin->add_option("--alpha", s.alpha, "Parameter of the Balpha map as re,im");

  auto* eig = app.add_subcommand("eigs", "Eigenvalues and reciprocal pairing of a pencil");
  add_common(eig);
  eig->add_option("input", s.input, "Pencil JSON ('-' for stdin)")->required();

  auto* ord = app.add_subcommand("orders", "Invariant orders at -1 or infinity");
  add_common(ord);
  ord->add_option("input", s.input, "Pencil JSON ('-' for stdin)")->required();
  ord->add_option("--point", s.point, "-1 or inf")->capture_default_str();
  ord->add_option("--target", s.target, "H for (1+z)R, R for R")->capture_default_str();
  ord->add_option("--rank", s.rank, "Normal rank (estimated when omitted)");

  auto* ver = app.add_subcommand("verify", "Certify a pencil against its source matrix");
  add_common(ver);
  ver->add_option("pencil", s.input, "Pencil JSON")->required();
  ver->add_option("source", s.second, "RationalMatrix JSON")->required();
  ver->add_option("--alpha", s.alpha, "Weight alpha + conj(alpha) z as re,im (default 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    bool ok = true;
    Json result;
    if (*gen) {
      result = do_generate(s);
    } else if (*dec) {
      result = do_decompose(s);
    } else if (*rea) {
      result = do_realize(s);
    } else if (*lin) {
      result = do_linearize(s);
    } else if (*eig) {
      result = do_eigs(s);
    } else if (*ord) {
      result = do_orders(s);
    } else {
      result = do_verify(s, ok);
    }
    out << io::dump(result) << '\n';
    if (!ok) err << "verification failed\n";
    return ok ? kExitOk : kExitMath;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    out << io::dump(io::encode(e)) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
}

}  // namespace palrat::cli
