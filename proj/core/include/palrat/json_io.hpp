// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "palrat/certify.hpp"
#include "palrat/decompose.hpp"
#include "palrat/errors.hpp"
#include "palrat/genesis.hpp"
#include "palrat/linearize.hpp"
#include "palrat/realize.hpp"
#include "palrat/structural.hpp"

namespace palrat::io {

using Json = nlohmann::json;

/// Malformed or ill-shaped JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// complex: [re, im]; CMatrix: {"rows", "cols", "data": [[re, im], ...]} row-major;
// RationalMatrix: {"m", "n", "poly": [CMatrix...], "poles": [{"lambda", "coeffs"}...]};
// Pencil: {"M1", "M0", "state_dim", "io_rows", "io_cols"}; Realization: {"E", "A", "B", "C"}.
Json encode(Complex z);
Json encode(const ExtComplex& z);  // "inf" for the point at infinity
Json encode(const CMatrix& m);
Json encode(const RationalMatrix& r);
Json encode(const Pencil& p);
Json encode(const Realization& r);
Json encode(const std::vector<Eigenvalue>& eigs);
Json encode(const StructuralIndices& s);
Json encode(const MinimalityReport& r);
Json encode(const SymmetryReport& r);
Json encode(const TransferCheck& t);
Json encode(const Certificate& c);
Json encode(const CompressionReport& c);
Json encode(const StabilitySplit& s);
Json encode(const SplitSymmetryReport& s);
Json encode(const RealizationResult& r);
Json encode(const GeneratedInstance& g);
Json encode(const Error& e);

Complex decode_complex(const Json& j);
ExtComplex decode_point(const Json& j);
CMatrix decode_matrix(const Json& j);
RationalMatrix decode_rational(const Json& j);
Pencil decode_pencil(const Json& j);
Realization decode_realization(const Json& j);

/// Throws FormatError on syntax errors.
Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Shortest representation that parses back to the same doubles.
std::string dump(const Json& j);

}  // namespace palrat::io
