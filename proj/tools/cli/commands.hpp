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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entangle/campaign.hpp"
#include "entangle/measures.hpp"
#include "state_file.hpp"

namespace entangle::cli {

struct MeasureOptions {
    std::string state_path;
    std::vector<std::size_t> part_a;  // 1-based factor indices
    std::string format = "text";      // text | json
    std::optional<std::string> out_path;
    bool timestamp = true;
};

struct VerifyOptions {
    std::vector<Suite> suites;
    CampaignConfig config;
};

/// Parses "1,3" into {1, 3}. Raises kExitParseError on anything else.
std::vector<std::size_t> parse_partition(const std::string &text);

/// Seed from ENTANGLE_SEED, or 0 when unset.
std::uint64_t default_seed();

/// Loads, validates and (when more than two factors) bipartitions a state.
PureState load_bipartite_state(const std::string &path, const std::vector<std::size_t> &part_a, std::ostream &err,
                               std::string *checksum = nullptr);

std::string report_json(const EntanglementReport &report, const MeasureOptions &options, const std::string &checksum);
std::string report_text(const EntanglementReport &report);

int cmd_measure(const MeasureOptions &options, std::ostream &out, std::ostream &err);
int cmd_schmidt(const std::string &state_path, bool bases, std::ostream &out, std::ostream &err);
int cmd_random(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed, const std::string &out_path,
               std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace entangle::cli
