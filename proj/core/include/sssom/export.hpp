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

#ifndef SSSOM_EXPORT_HPP_
#define SSSOM_EXPORT_HPP_

#include <string>

#include "sssom/model.hpp"

namespace sssom {

// One JSON object: present set-level slots, "curie_map", extensions, then
// "mappings". Keys appear in canonical slot order.
std::string to_json(const MappingSet& set);

inline constexpr const char* kSssomNamespace = "https://w3id.org/sssom/";

// One mapping node per row with an sssom:<slot> triple per present slot.
// With `emit_direct`, non-negated rows also yield `subject predicate object`.
// Lines are sorted and LF-terminated. Throws UnresolvablePrefix.
std::string to_ntriples(const MappingSet& set, bool emit_direct, bool use_builtin_prefixes = true);

}  // namespace sssom

#endif  // SSSOM_EXPORT_HPP_
