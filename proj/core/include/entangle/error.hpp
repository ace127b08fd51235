// Copyright 2026 The Entangle Authors
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

#include <stdexcept>
#include <string>

namespace entangle {

enum class ErrorKind {
    kInvalidInput,
    kNumericalFailure,
    kInvalidPartition,
    kUndefinedMeasure,
};

const char *to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. Callers that only
/// care about the category can switch on kind().
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string &message) : Error(ErrorKind::kInvalidInput, message) {}
};

struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string &message) : Error(ErrorKind::kNumericalFailure, message) {}
};

struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string &message) : Error(ErrorKind::kInvalidPartition, message) {}
};

/// The probability-difference measure needs at least two Schmidt levels.
struct UndefinedMeasure : Error {
    explicit UndefinedMeasure(const std::string &message) : Error(ErrorKind::kUndefinedMeasure, message) {}
};

}  // namespace entangle
