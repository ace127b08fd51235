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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entangle/error.hpp"
#include "entangle/schmidt.hpp"

#ifndef ENTANGLE_VERSION
#define ENTANGLE_VERSION "0.0.0"
#endif

namespace entangle::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedFailures = 25;

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int exit_code_for(const Error &e) {
    switch (e.kind()) {
        case ErrorKind::kUndefinedMeasure:
            return kExitUndefinedMeasure;
        case ErrorKind::kNumericalFailure:
            return kExitVerificationFailed;
        case ErrorKind::kInvalidInput:
        case ErrorKind::kInvalidPartition:
            return kExitParseError;
    }
    return kExitParseError;
}

// Runs a command body and maps every error to its exit code.
template <typename Body>
int guarded(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const CliError &e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

void emit(const std::string &text, const std::optional<std::string> &path, std::ostream &out) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw CliError(kExitIoError, "cannot write " + *path);
    file << text;
    file.flush();
    if (!file) throw CliError(kExitIoError, "failed writing " + *path);
}

std::string matrix_text(const ComplexMatrix &m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += "  ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += "  ";
            s += "(" + fmt15(m(r, c).real()) + ", " + fmt15(m(r, c).imag()) + ")";
        }
        s += "\n";
    }
    return s;
}

}  // namespace

std::vector<std::size_t> parse_partition(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception &) {
            throw CliError(kExitParseError, "bad factor index '" + item + "' in --part-a");
        }
        if (pos != item.size() || v == 0 || item.find('-') != std::string::npos) {
            throw CliError(kExitParseError, "bad factor index '" + item + "' in --part-a (indices are 1-based)");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw CliError(kExitParseError, "--part-a is empty");
    return out;
}

std::uint64_t default_seed() {
    const char *env = std::getenv("ENTANGLE_SEED");
    if (env == nullptr || *env == '\0') return 0;
    try {
        std::size_t pos = 0;
        const std::string s(env);
        const unsigned long long v = std::stoull(s, &pos);
        if (pos == s.size() && s.find('-') == std::string::npos) return v;
    } catch (const std::exception &) {
    }
    throw CliError(kExitParseError, std::string("ENTANGLE_SEED is not an unsigned integer: ") + env);
}

PureState load_bipartite_state(const std::string &path, const std::vector<std::size_t> &part_a, std::ostream &err,
                               std::string *checksum) {
    const LoadedState loaded = read_state_file(path);
    bool renormalized = false;
    StateTensor tensor = normalized(loaded, renormalized);
    if (renormalized && std::abs(loaded.norm - 1.0) > 1e-12) {
        err << "warning: state norm " << fmt15(loaded.norm) << " renormalized to 1\n";
    }
    if (checksum) *checksum = loaded.checksum;

    if (tensor.dims.size() == 2 && part_a.empty()) {
        ComplexMatrix c(tensor.dims[0], tensor.dims[1], std::move(tensor.amplitudes));
        return PureState(std::move(c));
    }
    if (tensor.dims.size() == 2) throw CliError(kExitParseError, "--part-a only applies to states with 3+ factors");
    if (part_a.empty()) {
        throw CliError(kExitParseError, "state has " + std::to_string(tensor.dims.size()) +
                                            " factors; choose a cut with --part-a");
    }
    std::vector<std::size_t> zero_based;
    for (std::size_t f : part_a) zero_based.push_back(f - 1);
    return bipartition(tensor, zero_based);
}

std::string report_json(const EntanglementReport &report, const MeasureOptions &options, const std::string &checksum) {
    json j;
    j["tool_version"] = ENTANGLE_VERSION;
    if (options.timestamp) j["timestamp"] = utc_timestamp();
    j["input_checksum"] = checksum;
    if (!options.part_a.empty()) j["part_a"] = options.part_a;
    j["e_probability_sum"] = report.e_probability_sum;
    j["e_closed_form"] = report.e_closed_form;
    j["entropy_of_entanglement"] = report.entropy_of_entanglement;
    j["two_entropy"] = report.two_entropy;
    j["renyi2"] = report.renyi2;
    j["schmidt_rank"] = report.schmidt_rank;
    j["lambdas"] = report.lambdas;
    return j.dump(2) + "\n";
}

std::string report_text(const EntanglementReport &report) {
    std::string s;
    s += "e_probability_sum:       " + fmt15(report.e_probability_sum) + "\n";
    s += "e_closed_form:           " + fmt15(report.e_closed_form) + "\n";
    s += "entropy_of_entanglement: " + fmt15(report.entropy_of_entanglement) + "\n";
    s += "two_entropy:             " + fmt15(report.two_entropy) + "\n";
    s += "renyi2:                  " + fmt15(report.renyi2) + "\n";
    s += "schmidt_rank:            " + std::to_string(report.schmidt_rank) + "\n";
    s += "lambdas:                 ";
    for (std::size_t i = 0; i < report.lambdas.size(); ++i) s += (i ? ", " : "") + fmt15(report.lambdas[i]);
    return s + "\n";
}

int cmd_measure(const MeasureOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (options.format != "text" && options.format != "json") {
            throw CliError(kExitParseError, "unknown format '" + options.format + "'");
        }
        std::string checksum;
        const PureState psi = load_bipartite_state(options.state_path, options.part_a, err, &checksum);
        const EntanglementReport report = make_report(psi);
        emit(options.format == "json" ? report_json(report, options, checksum) : report_text(report),
             options.out_path, out);
        return static_cast<int>(kExitOk);
    });
}

int cmd_schmidt(const std::string &state_path, bool bases, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const PureState psi = load_bipartite_state(state_path, {}, err);
        const SchmidtDecomposition sd = schmidt_decompose(psi);
        std::string s;
        for (std::size_t i = 0; i < sd.lambdas.size(); ++i) s += (i ? ", " : "") + fmt15(sd.lambdas[i]);
        s += "\n";
        if (bases) {
            s += "basis_a (columns |i_A>):\n" + matrix_text(sd.basis_a);
            s += "basis_b (columns |i_B>):\n" + matrix_text(sd.basis_b);
        }
        out << s;
        return static_cast<int>(kExitOk);
    });
}

int cmd_random(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed, const std::string &out_path,
               std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (dim_a == 0 || dim_b == 0) throw CliError(kExitParseError, "dimensions must be >= 1");
        const PureState psi = random_pure_state(dim_a, dim_b, seed);
        const auto amps = psi.vector();
        write_state_file(out_path, StateTensor{{dim_a, dim_b}, ComplexVector(amps.begin(), amps.end())});
        out << "wrote " << dim_a << "x" << dim_b << " state (seed " << seed << ") to " << out_path << "\n";
        return static_cast<int>(kExitOk);
    });
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::size_t total_failures = 0;
        for (Suite suite : options.suites) {
            const SuiteResult r = run_suite(suite, options.config);
            out << suite_name(suite) << ": " << r.trials << " trials, " << r.failures.size()
                << " failures, tolerance " << fmt15(r.tolerance);
            for (const auto &[name, value] : r.stats) out << ", " << name << " " << fmt15(value);
            out << (r.passed() ? "  PASS" : "  FAIL") << "\n";
            for (std::size_t i = 0; i < r.failures.size() && i < kMaxListedFailures; ++i) {
                const TrialFailure &f = r.failures[i];
                out << "  failed trial " << f.index << " (seed " << f.seed << "): value " << fmt15(f.value) << "\n";
            }
            if (r.failures.size() > kMaxListedFailures) {
                out << "  ... " << r.failures.size() - kMaxListedFailures << " more failed trials\n";
            }
            total_failures += r.failures.size();
        }
        out << (total_failures == 0 ? "all suites passed" : "verification FAILED") << "\n";
        return static_cast<int>(total_failures == 0 ? kExitOk : kExitVerificationFailed);
    });
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement of bipartite pure states", "entangle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ENTANGLE_VERSION);

    MeasureOptions measure;
    std::string part_a_text;
    bool no_timestamp = false;
    std::string out_path;
    auto *measure_cmd = app.add_subcommand("measure", "Report entanglement measures of a state file");
    measure_cmd->add_option("file", measure.state_path, "State file")->required();
    measure_cmd->add_option("--part-a", part_a_text, "1-based factors forming side A, e.g. 1,3");
    measure_cmd->add_option("--format", measure.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    measure_cmd->add_option("--out", out_path, "Write the report to this path");
    measure_cmd->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from JSON reports");

    std::string schmidt_path;
    bool bases = false;
    auto *schmidt_cmd = app.add_subcommand("schmidt", "Print the Schmidt parameters of a bipartite state");
    schmidt_cmd->add_option("file", schmidt_path, "State file")->required();
    schmidt_cmd->add_flag("--bases", bases, "Also print both Schmidt bases");

    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::optional<std::uint64_t> seed;
    std::string random_out;
    auto *random_cmd = app.add_subcommand("random", "Write a Haar-random bipartite state file");
    random_cmd->add_option("--dim-a", dim_a, "Dimension of A")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--dim-b", dim_b, "Dimension of B")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", seed, "Seed (default: $ENTANGLE_SEED or 0)");
    random_cmd->add_option("--out", random_out, "Output path")->required();

    std::string suite = "all";
    CampaignConfig config;
    std::optional<double> tolerance;
    auto *verify_cmd = app.add_subcommand("verify", "Run randomized property campaigns");
    verify_cmd->add_option("--suite", suite, "equivalence|invariance|monotonicity|majorization|all");
    verify_cmd->add_option("--trials", config.trials, "Trials per suite")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-dim", config.max_dim, "Largest local dimension")->check(CLI::Range(2, 64));
    verify_cmd->add_option("--seed", seed, "Base seed (default: $ENTANGLE_SEED or 0)");
    verify_cmd->add_option("--tolerance", tolerance, "Override every suite's pass threshold");
    verify_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    return guarded(err, [&]() -> int {
        if (*measure_cmd) {
            if (!part_a_text.empty()) measure.part_a = parse_partition(part_a_text);
            if (!out_path.empty()) measure.out_path = out_path;
            measure.timestamp = !no_timestamp;
            return cmd_measure(measure, out, err);
        }
        if (*schmidt_cmd) return cmd_schmidt(schmidt_path, bases, out, err);
        if (*random_cmd) return cmd_random(dim_a, dim_b, seed.value_or(default_seed()), random_out, out, err);

        VerifyOptions verify;
        if (suite == "all") {
            verify.suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
        } else if (auto s = parse_suite(suite)) {
            verify.suites.push_back(*s);
        } else {
            throw CliError(kExitParseError, "unknown suite '" + suite + "'");
        }
        config.seed = seed.value_or(default_seed());
        config.tolerance = tolerance;
        verify.config = config;
        return cmd_verify(verify, out, err);
    });
}

}  // namespace entangle::cli
