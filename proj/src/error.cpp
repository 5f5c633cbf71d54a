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

#include "pblockade/error.hpp"

namespace pblockade {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension_mismatch";
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::ResidualTooLarge: return "residual_too_large";
        case ErrorKind::NoConvergence: return "no_converge";
        case ErrorKind::Undefined: return "undefined";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what, double value)
    : std::runtime_error(what), kind_(kind), value_(value) {}

}  // namespace pblockade
