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

#include "state_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entangle/linalg.hpp"

namespace entangle::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw CliError(kExitParseError, "malformed state file: " + what); }

}  // namespace

std::string fnv1a_hex(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

LoadedState parse_state_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_error(e.what());
    }
    if (!doc.is_object()) parse_error("top level must be an object");
    if (!doc.contains("format_version") || !doc["format_version"].is_number_integer()) {
        parse_error("missing integer format_version");
    }
    if (doc["format_version"].get<long long>() != kFormatVersion) {
        parse_error("unsupported format_version " + doc["format_version"].dump());
    }
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() < 2) {
        parse_error("dims must be an array of at least two factor dimensions");
    }
    LoadedState out;
    std::size_t total = 1;
    for (const auto &d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 1) parse_error("dims must be positive integers");
        out.tensor.dims.push_back(d.get<std::size_t>());
        total *= out.tensor.dims.back();
        if (total > (1u << 24)) parse_error("state is too large");
    }
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) parse_error("missing amplitudes array");
    const auto &amps = doc["amplitudes"];
    if (amps.size() != total) {
        parse_error("expected " + std::to_string(total) + " amplitudes, found " + std::to_string(amps.size()));
    }
    out.tensor.amplitudes.reserve(total);
    for (const auto &pair : amps) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            parse_error("each amplitude must be a [re, im] pair of numbers");
        }
        const Complex z(pair[0].get<double>(), pair[1].get<double>());
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) parse_error("non-finite amplitude");
        out.tensor.amplitudes.push_back(z);
    }
    out.norm = vector_norm(out.tensor.amplitudes);
    out.checksum = fnv1a_hex(text);
    return out;
}

LoadedState read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitIoError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_text(buf.str());
}

std::string format_state(const StateTensor &tensor) {
    std::string s = "{\n  \"format_version\": " + std::to_string(kFormatVersion) + ",\n  \"dims\": " +
                    json(tensor.dims).dump() + ",\n  \"amplitudes\": [";
    for (std::size_t i = 0; i < tensor.amplitudes.size(); ++i) {
        s += i == 0 ? "\n    [" : ",\n    [";
        s += json(tensor.amplitudes[i].real()).dump() + ", " + json(tensor.amplitudes[i].imag()).dump() + "]";
    }
    s += "\n  ]\n}\n";
    return s;
}

void write_state_file(const std::filesystem::path &path, const StateTensor &tensor) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError(kExitIoError, "cannot write " + path.string());
    out << format_state(tensor);
    out.flush();
    if (!out) throw CliError(kExitIoError, "failed writing " + path.string());
}

StateTensor normalized(const LoadedState &state, bool &renormalized) {
    if (!std::isfinite(state.norm) || std::abs(state.norm - 1.0) > kFileNormTolerance) {
        throw CliError(kExitNormError, "state norm " + std::to_string(state.norm) + " is not within " +
                                           std::to_string(kFileNormTolerance) + " of 1");
    }
    StateTensor t = state.tensor;
    renormalized = std::abs(state.norm - 1.0) > kNormRounding;
    if (renormalized)
        for (auto &z : t.amplitudes) z /= state.norm;
    return t;
}

}  // namespace entangle::cli
