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

// File formats. All readers validate what they load and throw ValidationError
// naming the violated invariant.
//
//   POVM JSON     {"dim": n, "elements": [[[re, im], ...], ...]}  (row-major entries)
//   coin CSV      header "i,j,p", one row per joint outcome (0-based indices)
//   counts CSV    header "i,j,counts"; sidecar "<stem>.meta.json" holds the plan
//   density JSON  {"dim": 4, "re": [[...]], "im": [[...]]}

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcoin/coin.hpp"
#include "qcoin/experiment.hpp"
#include "qcoin/measurement.hpp"
#include "qcoin/optimizer.hpp"
#include "qcoin/states.hpp"

namespace qcoin::io {

using json = nlohmann::json;

/// Twelve significant digits, the precision used for every numeric output.
std::string format_number(double v);
/// v rounded to twelve significant digits (for JSON emission).
double round12(double v);

Povm read_povm_json(const std::filesystem::path &path, double tol = 1e-8);
void write_povm_json(const std::filesystem::path &path, const Povm &povm);

CoinState read_coin_csv(const std::filesystem::path &path, double tol = 1e-8);
void write_coin_csv(const std::filesystem::path &path, const CoinState &coin);

/// Density matrix JSON; `tol` applies to hermiticity, trace and positivity.
DensityOperator read_density_json(const std::filesystem::path &path, double tol = 1e-6);
/// Raw matrix from density JSON without validation (for validators and tests).
ComplexMatrix parse_density_json(const std::filesystem::path &path);
void write_density_json(const std::filesystem::path &path, const ComplexMatrix &m);

std::filesystem::path metadata_path(const std::filesystem::path &counts_csv);

/// Reads counts; the plan comes from the sidecar when present.
CountsTable read_counts_csv(const std::filesystem::path &path);
/// Writes counts and the sidecar; `manifest` is embedded in the sidecar.
void write_counts_csv(const std::filesystem::path &path, const CountsTable &table, const json &manifest);

json to_json(const SearchResult &result);
json to_json(const PayoffEstimate &estimate);
json to_json(const AcquisitionPlan &plan);

}  // namespace qcoin::io
