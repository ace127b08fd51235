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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "entangle/states.hpp"

namespace entangle::cli {

inline constexpr int kFormatVersion = 1;
/// Files whose norm is further than this from 1 are rejected on load.
inline constexpr double kFileNormTolerance = 1e-6;

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParseError = 2,
    kExitNormError = 3,
    kExitUndefinedMeasure = 4,
    kExitIoError = 5,
};

/// Error carrying the process exit code it maps to.
class CliError : public std::runtime_error {
   public:
    CliError(ExitCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ExitCode code() const noexcept { return code_; }

   private:
    ExitCode code_;
};

struct LoadedState {
    StateTensor tensor;      // exactly as stored in the file
    double norm = 0.0;       // Euclidean norm of the stored amplitudes
    std::string checksum;    // FNV-1a 64 of the file bytes, 16 hex digits
};

/// Parses a state file. Malformed content raises kExitParseError, an
/// unreadable file kExitIoError. The norm is reported, not enforced.
LoadedState read_state_file(const std::filesystem::path &path);
LoadedState parse_state_text(const std::string &text);

/// Serializes a tensor. Doubles are written in shortest round-trip form, so
/// reading the file back reproduces every amplitude bit for bit.
std::string format_state(const StateTensor &tensor);
void write_state_file(const std::filesystem::path &path, const StateTensor &tensor);

/// Divides by the stored norm unless it is within kNormRounding of 1. Raises kExitNormError beyond
/// kFileNormTolerance; `renormalized` tells whether anything was changed.
StateTensor normalized(const LoadedState &state, bool &renormalized);

std::string fnv1a_hex(const std::string &bytes);

}  // namespace entangle::cli
