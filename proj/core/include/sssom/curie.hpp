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

#ifndef SSSOM_CURIE_HPP_
#define SSSOM_CURIE_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sssom {

// Compact URI `prefix:local_id`. A default-constructed Curie is "absent".
struct Curie {
  std::string prefix;
  std::string local_id;

  // Splits at the first colon. Returns nullopt unless the result is
  // well_formed().
  static std::optional<Curie> parse(std::string_view text);

  bool empty() const noexcept { return prefix.empty() && local_id.empty(); }
  bool well_formed() const noexcept;
  std::string str() const;

  friend bool operator==(const Curie&, const Curie&) = default;
  friend std::strong_ordering operator<=>(const Curie& a, const Curie& b);
};

bool is_valid_prefix(std::string_view prefix) noexcept;

// prefix -> IRI prefix. Keys are unique and iterate alphabetically.
class PrefixMap {
 public:
  using Entries = std::map<std::string, std::string, std::less<>>;

  PrefixMap() = default;
  PrefixMap(std::initializer_list<Entries::value_type> init) : entries_(init) {}

  // Inserts or replaces.
  void set(std::string prefix, std::string iri_prefix);
  bool erase(std::string_view prefix);
  const std::string* find(std::string_view prefix) const;
  bool contains(std::string_view prefix) const { return find(prefix) != nullptr; }

  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  Entries entries_;
};

// skos, owl, rdfs, rdf, dc, oio, orcid, ror, wikidata, sssom.
const PrefixMap& builtin_prefixes();

// True for IRI prefixes starting with `http:`, `https:` or `urn:`.
bool plausible_iri_prefix(std::string_view iri) noexcept;

// Looks the prefix up in `pm`, then (when `use_builtins`) in builtin_prefixes().
// Throws UnresolvablePrefix.
std::string expand(const Curie& curie, const PrefixMap& pm, bool use_builtins = true);
const std::string* resolve_prefix(std::string_view prefix, const PrefixMap& pm,
                                  bool use_builtins = true);

// Longest matching IRI prefix wins; ties go to the alphabetically first
// prefix. Candidates that would leave an empty or whitespace-bearing local id
// are skipped. Throws NoMatchingPrefix.
Curie contract(std::string_view iri, const PrefixMap& pm);

// Union of both maps. Throws PrefixConflict when a prefix is bound to two
// different IRI prefixes.
PrefixMap merge_prefix_maps(const PrefixMap& a, const PrefixMap& b);

}  // namespace sssom

#endif  // SSSOM_CURIE_HPP_
