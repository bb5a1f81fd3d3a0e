// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace jaws {

/// Malformed input: bad shapes, invariants violated, unparsable files.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A spectrum or element that carries no information (all-zero, r < 1).
class DegenerateError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// A configuration outside what a closed form covers.
class UnsupportedError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// A requested computation exceeds the configured cost budget.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace jaws
