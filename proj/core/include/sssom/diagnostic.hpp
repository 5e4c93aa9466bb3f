// Copyright 2026 The sssomkit Authors
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

#ifndef SSSOM_DIAGNOSTIC_HPP_
#define SSSOM_DIAGNOSTIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sssom {

enum class Severity { Error, Warning, Info };

std::string_view to_string(Severity severity);  // "ERROR", "WARNING", "INFO"
std::optional<Severity> parse_severity(std::string_view text);

// One finding. `row` is 1-based over data rows; nullopt means set level.
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::optional<std::size_t> row;
  std::string slot;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Default severity attached to each catalog code.
Severity default_severity(std::string_view code);

// Orders by row (set-level first), then code. Stable within equal keys.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// `SEVERITY CODE row=N slot=S message`, one line per diagnostic.
std::string format_text(const std::vector<Diagnostic>& diagnostics);
// JSON array of {code, severity, row, slot, message}.
std::string format_json(const std::vector<Diagnostic>& diagnostics);

}  // namespace sssom

#endif  // SSSOM_DIAGNOSTIC_HPP_
