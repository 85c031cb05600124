/*
   Copyright 2026 The logfree authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace logfree {

enum class ErrorCode {
    SyntaxError,
    UnknownVariable,
    NonIntegerExponent,
    NotPrime,
    FieldMismatch,
    VariableListMismatch,
    OrderMismatch,
    DivisionByZero,
    NotDivisible,
    IndexOutOfRange,
    DimensionMismatch,
    NotSquare,
    RankTooLarge,
    ZeroMatrix,
    NonHomogeneousInput,
    CharDividesDegree,
    CharZero,
    NotASyzygy,
    NuRankDeficient,
    GammaNotMono,
    IndependenceFailed,
    JacobianRankDeficient,
    LengthMismatch,
    DegreeNotDivisible,
    OverlappingBlocks,
    UncoveredVariables,
    BlockShapeUnsupported,
    PairLimitExceeded,
    InvalidProblem,
    InternalError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::VariableListMismatch: return "VariableListMismatch";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::ZeroMatrix: return "ZeroMatrix";
        case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
        case ErrorCode::CharDividesDegree: return "CharDividesDegree";
        case ErrorCode::CharZero: return "CharZero";
        case ErrorCode::NotASyzygy: return "NotASyzygy";
        case ErrorCode::NuRankDeficient: return "NuRankDeficient";
        case ErrorCode::GammaNotMono: return "GammaNotMono";
        case ErrorCode::IndependenceFailed: return "IndependenceFailed";
        case ErrorCode::JacobianRankDeficient: return "JacobianRankDeficient";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegreeNotDivisible: return "DegreeNotDivisible";
        case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
        case ErrorCode::UncoveredVariables: return "UncoveredVariables";
        case ErrorCode::BlockShapeUnsupported: return "BlockShapeUnsupported";
        case ErrorCode::PairLimitExceeded: return "PairLimitExceeded";
        case ErrorCode::InvalidProblem: return "InvalidProblem";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

/// Library-wide exception: a machine-readable code plus a human message,
/// optionally annotated with an input position (parsing) or a remainder
/// witness (failed exact division).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Error& with_position(std::size_t pos) {
        position_ = pos;
        return *this;
    }
    Error& with_witness(std::string w) {
        witness_ = std::move(w);
        return *this;
    }

    ErrorCode code() const { return code_; }
    const std::optional<std::size_t>& position() const { return position_; }
    const std::string& witness() const { return witness_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
    std::string witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace logfree
