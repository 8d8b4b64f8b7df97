// Copyright 2026 The qcoin Authors
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

// Command implementations behind the qcoin executable. Each returns the
// process exit code: 0 success or certified, 2 valid run with a negative
// result, 1 input or configuration error. Every output file carries or
// references a manifest sufficient to re-run the command.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcoin/io.hpp"

namespace qcoin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/// Manifest for a run: command, parameters, seed, version, outputs.
io::json make_manifest(const std::string &command, const io::json &parameters,
                       std::optional<std::uint64_t> seed, const io::json &outputs);

struct SweepOptions {
    double p_start = 0.0;
    double p_end = 1.0;
    double p_step = 0.05;
    /// Lab-frame density matrix; the ideal |psi+> when empty.
    std::optional<std::filesystem::path> state_file;
    std::filesystem::path out;
};
int cmd_sweep(const SweepOptions &opt, std::ostream &out, std::ostream &err);

struct BoundOptions {
    int m = 2;
    int n = 3;
    int restarts = 1000;
    std::uint64_t seed = 1;
    int threads = 0;
    std::optional<std::filesystem::path> out;
};
int cmd_classical_bound(const BoundOptions &opt, std::ostream &out, std::ostream &err);
/// Projective-simulable bound; `m` is ignored.
int cmd_ps_bound(const BoundOptions &opt, std::ostream &out, std::ostream &err);

struct FeasibilityOptions {
    std::filesystem::path coin;
    int m = 2;
    int restarts = 1000;
    std::uint64_t seed = 1;
    int threads = 0;
};
/// Exit 0 when the coin is reachable (distance <= 1e-8), 2 otherwise.
int cmd_feasibility(const FeasibilityOptions &opt, std::ostream &out, std::ostream &err);

struct CertifyOptions {
    std::filesystem::path counts;
    double threshold = kClassicalBoundG3;
    int resamples = 2000;
    std::uint64_t seed = 1;
};
int cmd_certify(const CertifyOptions &opt, std::ostream &out, std::ostream &err);

struct SimulateOptions {
    double p = 1.0;
    double time_s = 3600.0;
    double rate_hz = 2.0;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> state_file;
    std::filesystem::path out;
};
int cmd_simulate(const SimulateOptions &opt, std::ostream &out, std::ostream &err);

enum class ValidateTarget { povm, coin, density };
int cmd_validate(ValidateTarget target, const std::filesystem::path &path, std::ostream &out, std::ostream &err);

/// Projective simulability of a POVM file; exit 0 simulable, 2 not.
int cmd_simulability(const std::filesystem::path &povm, double tol, std::ostream &out, std::ostream &err);

}  // namespace qcoin::cli
