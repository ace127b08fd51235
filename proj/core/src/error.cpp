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

#include "entangle/error.hpp"

namespace entangle {

const char *to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidInput:
            return "invalid input";
        case ErrorKind::kNumericalFailure:
            return "numerical failure";
        case ErrorKind::kInvalidPartition:
            return "invalid partition";
        case ErrorKind::kUndefinedMeasure:
            return "measure undefined";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace entangle
