// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace palrat {

enum class ErrorCode {
  InvalidInput,
  SingularSolve,
  SingularPencil,
  EvalAtPole,
  EvalAtSystemPole,
  NotSquare,
  InvalidAlpha,
  DegreeCap,
  StructureMismatch,
  NoAlphaFound,
  NotLaurentForm,
  SymmetryViolation,
  NotStrictlyProper,
  NeedMoreCoeffs,
  NoConvergence,
  NeedsMoebiusRoute,
  NotMinimalAtInfinity,
  ShapeError,
  UseCompressedRoute,
  InvalidTerm,
  CompressionFailed,
  DuplicatePole,
  BadInputLinearization,
  RankAmbiguous,
  InconsistentInput,
  TooLarge,
  DegenerateDraw,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `value()` carries an optional
/// diagnostic number (smallest singular value, residual, ...), NaN if unset.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        double value = std::numeric_limits<double>::quiet_NaN());

  ErrorCode code() const noexcept { return code_; }
  double value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  double value_;
};

}  // namespace palrat
