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

#include "sssom/curie.hpp"

#include <algorithm>

#include "sssom/errors.hpp"

namespace sssom {
namespace {

bool prefix_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

bool is_ascii_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool valid_local_id(std::string_view local) noexcept {
  return !local.empty() && std::none_of(local.begin(), local.end(), is_ascii_space);
}

}  // namespace

bool is_valid_prefix(std::string_view prefix) noexcept {
  return !prefix.empty() && std::all_of(prefix.begin(), prefix.end(), prefix_char);
}

std::optional<Curie> Curie::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  Curie c{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
  if (!c.well_formed()) return std::nullopt;
  return c;
}

bool Curie::well_formed() const noexcept {
  return is_valid_prefix(prefix) && valid_local_id(local_id);
}

std::string Curie::str() const {
  if (empty()) return {};
  std::string out;
  out.reserve(prefix.size() + 1 + local_id.size());
  out.append(prefix).push_back(':');
  out.append(local_id);
  return out;
}

// Same order as comparing the rendered strings, without building them.
std::strong_ordering operator<=>(const Curie& a, const Curie& b) {
  if (a.empty() || b.empty()) return !a.empty() <=> !b.empty();
  auto char_at = [](const Curie& c, std::size_t i) -> unsigned char {
    if (i < c.prefix.size()) return static_cast<unsigned char>(c.prefix[i]);
    if (i == c.prefix.size()) return ':';
    return static_cast<unsigned char>(c.local_id[i - c.prefix.size() - 1]);
  };
  const std::size_t na = a.prefix.size() + 1 + a.local_id.size();
  const std::size_t nb = b.prefix.size() + 1 + b.local_id.size();
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ca = char_at(a, i);
    const auto cb = char_at(b, i);
    if (ca != cb) return ca <=> cb;
  }
  return na <=> nb;
}

void PrefixMap::set(std::string prefix, std::string iri_prefix) {
  entries_.insert_or_assign(std::move(prefix), std::move(iri_prefix));
}

bool PrefixMap::erase(std::string_view prefix) {
  auto it = entries_.find(prefix);
  if (it == entries_.end()) return false;
  entries_.erase(it);
  return true;
}

const std::string* PrefixMap::find(std::string_view prefix) const {
  auto it = entries_.find(prefix);
  return it == entries_.end() ? nullptr : &it->second;
}

const PrefixMap& builtin_prefixes() {
  static const PrefixMap kBuiltins = {
      {"dc", "http://purl.org/dc/elements/1.1/"},
      {"oio", "http://www.geneontology.org/formats/oboInOwl#"},
      {"orcid", "https://orcid.org/"},
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"ror", "https://ror.org/"},
      {"skos", "http://www.w3.org/2004/02/skos/core#"},
      {"sssom", "https://w3id.org/sssom/"},
      {"wikidata", "http://www.wikidata.org/entity/"},
  };
  return kBuiltins;
}

bool plausible_iri_prefix(std::string_view iri) noexcept {
  return iri.starts_with("http:") || iri.starts_with("https:") || iri.starts_with("urn:");
}

const std::string* resolve_prefix(std::string_view prefix, const PrefixMap& pm, bool use_builtins) {
  if (const auto* iri = pm.find(prefix)) return iri;
  if (use_builtins) return builtin_prefixes().find(prefix);
  return nullptr;
}

std::string expand(const Curie& curie, const PrefixMap& pm, bool use_builtins) {
  const auto* iri = resolve_prefix(curie.prefix, pm, use_builtins);
  if (iri == nullptr) throw UnresolvablePrefix(curie.prefix);
  return *iri + curie.local_id;
}

Curie contract(std::string_view iri, const PrefixMap& pm) {
  const std::string* best_prefix = nullptr;
  std::size_t best_length = 0;
  for (const auto& [prefix, iri_prefix] : pm.entries()) {
    if (iri_prefix.size() < best_length || !iri.starts_with(iri_prefix)) continue;
    if (!valid_local_id(iri.substr(iri_prefix.size()))) continue;
    // Entries iterate alphabetically, so a strictly longer match is required
    // to displace an earlier prefix.
    if (best_prefix == nullptr || iri_prefix.size() > best_length) {
      best_prefix = &prefix;
      best_length = iri_prefix.size();
    }
  }
  if (best_prefix == nullptr) throw NoMatchingPrefix(std::string(iri));
  return Curie{*best_prefix, std::string(iri.substr(best_length))};
}

PrefixMap merge_prefix_maps(const PrefixMap& a, const PrefixMap& b) {
  PrefixMap out = a;
  for (const auto& [prefix, iri] : b.entries()) {
    if (const auto* existing = out.find(prefix)) {
      if (*existing != iri) throw PrefixConflict(prefix, *existing, iri);
      continue;
    }
    out.set(prefix, iri);
  }
  return out;
}

}  // namespace sssom
