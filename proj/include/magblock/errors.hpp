// Copyright 2026 The magblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace magblock {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
    kInvalidArgument = 2,
    kDimensionMismatch = 3,
    kNonUniqueSteadyState = 4,
    kConvergenceFailure = 5,
    kUndefinedCorrelation = 6,
    kBracket = 7,
    kConfig = 8,
    kIo = 9,
    kSweepAborted = 10,
    kCheckFailed = 11,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what, std::string field = {})
        : Error(ErrorCode::kInvalidArgument, what), field_(std::move(field)) {}

    /// Name of the offending parameter, when there is one.
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error(ErrorCode::kDimensionMismatch, what) {}
};

/// The Liouvillian kernel is more than one-dimensional.
class NonUniqueSteadyState : public Error {
public:
    explicit NonUniqueSteadyState(const std::string& what)
        : Error(ErrorCode::kNonUniqueSteadyState, what) {}
};

/// A solver finished but its residual is above the acceptance threshold.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, double residual)
        : Error(ErrorCode::kConvergenceFailure, what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// g2(0) requested for a state with (numerically) zero magnon population.
class UndefinedCorrelation : public Error {
public:
    explicit UndefinedCorrelation(const std::string& what)
        : Error(ErrorCode::kUndefinedCorrelation, what) {}
};

class BracketError : public Error {
public:
    BracketError(const std::string& what, double value_lo, double value_hi)
        : Error(ErrorCode::kBracket, what), value_lo_(value_lo), value_hi_(value_hi) {}

    double value_lo() const noexcept { return value_lo_; }
    double value_hi() const noexcept { return value_hi_; }

private:
    double value_lo_;
    double value_hi_;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& key, int line, const std::string& message)
        : Error(ErrorCode::kConfig, format(key, line, message)), key_(key), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    /// 0 when the offending value came from an override rather than a file line.
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& key, int line, const std::string& message) {
        std::string out = "config";
        if (line > 0) out += " line " + std::to_string(line);
        if (!key.empty()) out += " key '" + key + "'";
        return out + ": " + message;
    }

    std::string key_;
    int line_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

}  // namespace magblock
