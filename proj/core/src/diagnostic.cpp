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

#include "sssom/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include <json.hpp>

namespace sssom {
namespace {

constexpr std::array<std::pair<std::string_view, Severity>, 28> kDefaults = {{
    {"E001", Severity::Error},   {"E002", Severity::Error},   {"E003", Severity::Error},
    {"E004", Severity::Warning}, {"E005", Severity::Warning}, {"E006", Severity::Error},
    {"E007", Severity::Warning}, {"E008", Severity::Error},   {"E009", Severity::Warning},
    {"E010", Severity::Error},   {"E011", Severity::Warning}, {"E012", Severity::Error},
    {"E013", Severity::Warning}, {"E014", Severity::Warning}, {"E015", Severity::Info},
    {"E016", Severity::Warning}, {"E017", Severity::Warning}, {"E020", Severity::Warning},
    {"P001", Severity::Error},   {"P002", Severity::Warning}, {"P003", Severity::Warning},
    {"P004", Severity::Warning}, {"P005", Severity::Info},    {"P006", Severity::Info},
    {"P007", Severity::Warning}, {"M001", Severity::Warning}, {"M002", Severity::Warning},
    {"T001", Severity::Info},
}};

}  // namespace

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "ERROR";
    case Severity::Warning: return "WARNING";
    case Severity::Info: return "INFO";
  }
  return "";
}

std::optional<Severity> parse_severity(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "ERROR") return Severity::Error;
  if (upper == "WARNING" || upper == "WARN") return Severity::Warning;
  if (upper == "INFO") return Severity::Info;
  return std::nullopt;
}

Severity default_severity(std::string_view code) {
  for (const auto& [c, s] : kDefaults)
    if (c == code) return s;
  return Severity::Error;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     // nullopt (set level) sorts before any row.
                     if (a.row != b.row) return a.row < b.row;
                     return a.code < b.code;
                   });
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    out += to_string(d.severity);
    out += ' ';
    out += d.code;
    out += " row=";
    out += d.row ? std::to_string(*d.row) : std::string("set");
    out += " slot=";
    out += d.slot.empty() ? std::string("-") : d.slot;
    out += ' ';
    out += d.message;
    out += '\n';
  }
  return out;
}

std::string format_json(const std::vector<Diagnostic>& diagnostics) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& d : diagnostics) {
    nlohmann::ordered_json item;
    item["code"] = d.code;
    item["severity"] = to_string(d.severity);
    if (d.row)
      item["row"] = *d.row;
    else
      item["row"] = "set";
    if (d.slot.empty())
      item["slot"] = nullptr;
    else
      item["slot"] = d.slot;
    item["message"] = d.message;
    array.push_back(std::move(item));
  }
  return array.dump(2) + "\n";
}

}  // namespace sssom
