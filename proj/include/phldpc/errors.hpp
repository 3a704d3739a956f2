// Copyright 2026 The phldpc Authors
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

namespace phldpc {

/// Invalid argument or precondition violation at an API boundary.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A randomized construction did not converge within its attempt budget.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Port mismatch or ill-posed loop when composing SLH triples.
struct CompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured size budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw ParameterError(msg);
    }
}
}  // namespace detail

}  // namespace phldpc
