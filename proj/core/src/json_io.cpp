// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace palrat::io {
namespace {

Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return nullptr;
  return x > 0 ? "inf" : "-inf";
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

Index count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

double real_number(const Json& j) {
  if (!j.is_number()) throw FormatError("expected a number");
  return j.get<double>();
}

Json points(const std::vector<ExtComplex>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(encode(p));
  return out;
}

}  // namespace

Json encode(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json encode(const ExtComplex& z) { return z.infinite ? Json("inf") : encode(z.value); }

Json encode(const CMatrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) data.push_back(encode(m(i, j)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json encode(const RationalMatrix& r) {
  Json poly = Json::array();
  for (const auto& c : r.poly()) poly.push_back(encode(c));
  Json poles = Json::array();
  for (const auto& t : r.terms()) {
    Json coeffs = Json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(encode(c));
    poles.push_back({{"lambda", encode(t.lambda)}, {"coeffs", std::move(coeffs)}});
  }
  return {{"m", r.rows()}, {"n", r.cols()}, {"poly", std::move(poly)}, {"poles", std::move(poles)}};
}

Json encode(const Pencil& p) {
  return {{"M1", encode(p.M1)},
          {"M0", encode(p.M0)},
          {"state_dim", p.state_dim},
          {"io_rows", p.io_rows},
          {"io_cols", p.io_cols}};
}

Json encode(const Realization& r) {
  return {{"E", encode(r.E)}, {"A", encode(r.A)}, {"B", encode(r.B)}, {"C", encode(r.C)}};
}

Json encode(const std::vector<Eigenvalue>& eigs) {
  Json out = Json::array();
  for (const auto& e : eigs) out.push_back({{"value", encode(e.value)}, {"multiplicity", e.multiplicity}});
  return out;
}

Json encode(const StructuralIndices& s) { return {{"point", encode(s.point)}, {"orders", s.orders}}; }

Json encode(const MinimalityReport& r) {
  return {{"ok", r.ok()},
          {"finite_ok", r.finite_ok},
          {"infinity_ok", r.infinity_ok},
          {"worst_point", encode(r.worst_point)},
          {"rank_gap", r.rank_gap},
          {"infinity_gap", r.infinity_gap},
          {"tested_points", points(r.tested_points)}};
}

Json encode(const SymmetryReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"lambda", encode(p.lambda)}, {"partner", encode(p.partner)}, {"gap", number(p.gap)}});
  }
  return {{"pairs", std::move(pairs)},
          {"unimodular", points(r.unimodular)},
          {"unpaired", points(r.unpaired)}};
}

Json encode(const TransferCheck& t) {
  return {{"passed", t.passed},
          {"residual", number(t.residual)},
          {"r_scale", number(t.r_scale)},
          {"samples", t.samples}};
}

Json encode(const Certificate& c) {
  return {{"ok", c.ok()},
          {"structure", {{"kind", to_string(c.structure.kind)},
                         {"deviation", number(c.structure.deviation)},
                         {"ok", c.structure_ok}}},
          {"transfer", encode(c.transfer)},
          {"minimality", encode(c.minimality)},
          {"eigenvalues", encode(c.eigenvalues)},
          {"symmetry", encode(c.symmetry)},
          {"symmetry_ok", c.symmetry_ok}};
}

Json encode(const CompressionReport& c) {
  return {{"passed", c.passed},
          {"rank", c.rank},
          {"discarded_residual", number(c.discarded_residual)},
          {"spectral_gap", number(c.spectral_gap)},
          {"pole_deviation", number(c.pole_deviation)},
          {"transfer_residual", number(c.transfer_residual)}};
}

Json encode(const StabilitySplit& s) {
  return {{"r_in", encode(s.r_in)},
          {"r_out", encode(s.r_out)},
          {"r_s1", encode(s.r_s1)},
          {"r0", encode(s.r0)}};
}

Json encode(const SplitSymmetryReport& s) {
  return {{"passed", s.passed},
          {"inout_deviation", number(s.inout_deviation)},
          {"unit_part_deviation", number(s.unit_part_deviation)},
          {"scale", number(s.scale)}};
}

Json encode(const RealizationResult& r) {
  return {{"realization", encode(r.realization)},
          {"pencil", encode(r.pencil)},
          {"r_f", r.hankel.r_f},
          {"hankel_order", r.hankel.k},
          {"singular_values", r.hankel.singular_values},
          {"transfer_residual", number(r.transfer_residual)},
          {"strongly_minimal", r.strongly_minimal}};
}

Json encode(const GeneratedInstance& g) {
  return {{"R", encode(g.r)},
          {"pencil", encode(g.pencil)},
          {"alpha", encode(g.alpha)},
          {"kind", to_string(g.kind)}};
}

Json encode(const Error& e) {
  Json out = {{"error", to_string(e.code())}, {"message", e.what()}};
  if (!std::isnan(e.value())) out["value"] = number(e.value());
  return out;
}

Complex decode_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw FormatError("complex numbers are [re, im]");
  return {real_number(j[0]), real_number(j[1])};
}

ExtComplex decode_point(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtComplex::infinity();
    throw FormatError("unknown point \"" + j.get<std::string>() + "\"");
  }
  return decode_complex(j);
}

CMatrix decode_matrix(const Json& j) {
  const Index rows = count(j, "rows"), cols = count(j, "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    throw FormatError("matrix data must hold rows*cols entries");
  }
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) m(i, k) = decode_complex(data[i * cols + k]);
  }
  return m;
}

RationalMatrix decode_rational(const Json& j) {
  const Index m = count(j, "m"), n = count(j, "n");
  auto blocks = [&](const Json& arr) {
    if (!arr.is_array()) throw FormatError("expected an array of matrices");
    std::vector<CMatrix> out;
    for (const auto& b : arr) {
      out.push_back(decode_matrix(b));
      if (out.back().rows() != m || out.back().cols() != n) {
        throw FormatError("coefficient size differs from m x n");
      }
    }
    return out;
  };
  std::vector<CMatrix> poly = j.contains("poly") ? blocks(j["poly"]) : std::vector<CMatrix>{};
  std::vector<PoleTerm> terms;
  if (j.contains("poles")) {
    if (!j["poles"].is_array()) throw FormatError("\"poles\" must be an array");
    for (const auto& p : j["poles"]) {
      PoleTerm t;
      t.lambda = decode_complex(field(p, "lambda"));
      t.coeffs = blocks(field(p, "coeffs"));
      terms.push_back(std::move(t));
    }
  }
  return RationalMatrix(m, n, std::move(poly), std::move(terms));
}

Pencil decode_pencil(const Json& j) {
  Pencil p;
  p.M1 = decode_matrix(field(j, "M1"));
  p.M0 = decode_matrix(field(j, "M0"));
  p.state_dim = count(j, "state_dim");
  p.io_rows = count(j, "io_rows");
  p.io_cols = count(j, "io_cols");
  try {
    p.validate();
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return p;
}

Realization decode_realization(const Json& j) {
  Realization r;
  r.E = decode_matrix(field(j, "E"));
  r.A = decode_matrix(field(j, "A"));
  r.B = decode_matrix(field(j, "B"));
  r.C = decode_matrix(field(j, "C"));
  return r;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace palrat::io
