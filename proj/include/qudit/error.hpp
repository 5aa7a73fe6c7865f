// Copyright 2026 The Qudit Block Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qudit {

enum class ErrorKind {
    EmptySystem,
    DimTooSmall,
    IndexOverflow,
    QuditOutOfRange,
    IndexOutOfRange,
    DigitOutOfRange,
    AllocationTooLarge,
    SystemMismatch,
    LengthMismatch,
    NotBijection,
    NotUnitary,
    ShapeMismatch,
    ControlTargetOverlap,
    DuplicateControl,
    ValueOutOfRange,
    SyntaxError,
    ValidationError,
    InvalidWeights,
    SystemTooLarge,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptySystem: return "EmptySystem";
        case ErrorKind::DimTooSmall: return "DimTooSmall";
        case ErrorKind::IndexOverflow: return "IndexOverflow";
        case ErrorKind::QuditOutOfRange: return "QuditOutOfRange";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
        case ErrorKind::AllocationTooLarge: return "AllocationTooLarge";
        case ErrorKind::SystemMismatch: return "SystemMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotBijection: return "NotBijection";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ControlTargetOverlap: return "ControlTargetOverlap";
        case ErrorKind::DuplicateControl: return "DuplicateControl";
        case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::InvalidWeights: return "InvalidWeights";
        case ErrorKind::SystemTooLarge: return "SystemTooLarge";
    }
    return "Unknown";
}

/// Raised by every fallible operation in the library. `kind()` identifies the
/// failure class; `what()` carries a human readable diagnostic.
class SimError : public std::runtime_error {
   public:
    SimError(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

    /// Resource failures (oversized allocations, index-space overflow) as
    /// opposed to malformed input.
    bool is_resource_error() const noexcept {
        return kind_ == ErrorKind::AllocationTooLarge || kind_ == ErrorKind::IndexOverflow ||
               kind_ == ErrorKind::SystemTooLarge;
    }

   private:
    ErrorKind kind_;
};

/// Syntax errors in the circuit text format. Line and column are 1-based.
class ParseError : public SimError {
   public:
    ParseError(size_t line, size_t col, const std::string &message)
        : SimError(ErrorKind::SyntaxError,
                   "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {
    }

    size_t line() const noexcept {
        return line_;
    }
    size_t col() const noexcept {
        return col_;
    }

   private:
    size_t line_;
    size_t col_;
};

}  // namespace qudit
