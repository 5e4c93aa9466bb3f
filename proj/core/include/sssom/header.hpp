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

#ifndef SSSOM_HEADER_HPP_
#define SSSOM_HEADER_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sssom/diagnostic.hpp"
#include "sssom/model.hpp"

namespace sssom {

// Key/value tree from the commented YAML region, in file order.
struct HeaderBlock {
  std::vector<std::pair<std::string, HeaderValue>> entries;

  const HeaderValue* find(std::string_view key) const;
};

// Parses the YAML subset used by SSSOM headers: `key: scalar`, block lists
// (`- item`) and one-level nested maps. Lines must already have their leading
// `#` removed. Anchors, aliases, flow collections, document markers and
// deeper nesting throw FatalParse. Duplicate keys keep the last value and
// record a P003 warning.
HeaderBlock parse_header_block(const std::vector<std::string_view>& lines,
                               std::vector<Diagnostic>& diagnostics);

// Inverse of parse_header_block: produces uncommented YAML lines.
std::vector<std::string> render_header_entry(std::string_view key, const HeaderValue& value);

// Double-quoted YAML scalar.
std::string quote_scalar(std::string_view value);

}  // namespace sssom

#endif  // SSSOM_HEADER_HPP_
