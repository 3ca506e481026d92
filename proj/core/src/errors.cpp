// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include "palrat/errors.hpp"

namespace palrat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SingularSolve: return "SingularSolve";
    case ErrorCode::SingularPencil: return "SingularPencil";
    case ErrorCode::EvalAtPole: return "EvalAtPole";
    case ErrorCode::EvalAtSystemPole: return "EvalAtSystemPole";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::DegreeCap: return "DegreeCap";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NoAlphaFound: return "NoAlphaFound";
    case ErrorCode::NotLaurentForm: return "NotLaurentForm";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NotStrictlyProper: return "NotStrictlyProper";
    case ErrorCode::NeedMoreCoeffs: return "NeedMoreCoeffs";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NeedsMoebiusRoute: return "NeedsMoebiusRoute";
    case ErrorCode::NotMinimalAtInfinity: return "NotMinimalAtInfinity";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::UseCompressedRoute: return "UseCompressedRoute";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::CompressionFailed: return "CompressionFailed";
    case ErrorCode::DuplicatePole: return "DuplicatePole";
    case ErrorCode::BadInputLinearization: return "BadInputLinearization";
    case ErrorCode::RankAmbiguous: return "RankAmbiguous";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, double value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      value_(value) {}

}  // namespace palrat
