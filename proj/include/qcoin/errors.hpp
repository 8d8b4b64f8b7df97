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

#include <stdexcept>
#include <string>

namespace qcoin {

/// Thrown when an operation is called with a parameter outside its domain.
/// The message names the offending parameter.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Which invariant a rejected value violated.
enum class Violation {
    parse,
    dimension,
    hermiticity,
    trace,
    positivity,
    completeness,
    normalization,
    negativity,
    stochasticity,
};

const char *violation_name(Violation v);

/// Thrown by validating constructors and file readers.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(Violation kind, const std::string &detail)
        : std::runtime_error(std::string(violation_name(kind)) + ": " + detail), kind_(kind) {
    }

    Violation kind() const noexcept {
        return kind_;
    }

  private:
    Violation kind_;
};

/// Raised by the count-analysis pipeline when the data cannot support an estimate.
class AnalysisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline const char *violation_name(Violation v) {
    switch (v) {
        case Violation::parse:
            return "parse";
        case Violation::dimension:
            return "dimension";
        case Violation::hermiticity:
            return "hermiticity";
        case Violation::trace:
            return "trace";
        case Violation::positivity:
            return "positivity";
        case Violation::completeness:
            return "completeness";
        case Violation::normalization:
            return "normalization";
        case Violation::negativity:
            return "negativity";
        case Violation::stochasticity:
            return "stochasticity";
    }
    return "unknown";
}

}  // namespace qcoin
