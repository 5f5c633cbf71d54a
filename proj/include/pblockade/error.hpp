// Copyright 2026 The pblockade Authors
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

#include <limits>
#include <stdexcept>
#include <string>

namespace pblockade {

enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    Singular,
    ResidualTooLarge,
    NoConvergence,
    Undefined,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `value` carries
// the quantity that tripped the check (condition estimate, achieved residual,
// last cutoff, ...) or NaN when there is none.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, double value = std::numeric_limits<double>::quiet_NaN());

    ErrorKind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    double value_;
};

}  // namespace pblockade
