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

#include <string>

#include "jaws/algebra.hpp"

namespace jaws {

/**
 * Parses a JAWS model document.
 *
 * Errors name the offending field ("components[1].dim") or, for malformed
 * JSON, the line and column. `source` prefixes every message.
 */
JawsModel parse_model(const std::string &text, const std::string &source = "<model>");

JawsModel load_model(const std::string &path);

std::string model_to_json(const JawsModel &model);

} // namespace jaws
