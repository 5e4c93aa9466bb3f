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

#ifndef SSSOM_TRANSFORMS_HPP_
#define SSSOM_TRANSFORMS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sssom/diagnostic.hpp"
#include "sssom/model.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

enum class PrefixConflictPolicy { Error, FirstWins };

struct MergeResult {
  MappingSet set;
  std::vector<Diagnostic> warnings;
};

// Rows are concatenated and deduplicated by MappingKey. Among duplicates the
// higher confidence wins, then the earlier input. Equal set-level values
// collapse; conflicting ones move to set_extensions as `<slot>_<n>` where n is
// the 1-based input position.
MergeResult merge(const std::vector<MappingSet>& sets,
                  PrefixConflictPolicy policy = PrefixConflictPolicy::Error,
                  std::optional<std::string> mapping_set_id = std::nullopt);

// Conjunction of optional clauses. A disengaged clause accepts everything; an
// engaged but empty set accepts nothing.
struct FilterCriteria {
  std::optional<double> min_confidence;
  std::optional<std::set<Curie>> predicates;
  std::optional<std::set<PredicateTier>> tiers;
  std::optional<std::set<MatchType>> match_types;
  std::optional<std::set<std::string>> subject_prefixes;
  std::optional<std::set<std::string>> object_prefixes;
  bool exclude_negated = false;

  bool accepts(const Mapping& m) const;
};

FilterCriteria conjunction(const FilterCriteria& a, const FilterCriteria& b);

struct FilterResult {
  MappingSet set;
  // Rows rejected by min_confidence because they carry no confidence.
  std::size_t skipped_without_confidence = 0;
};

FilterResult filter(const MappingSet& set, const FilterCriteria& criteria);

struct PredicateConflict {
  Curie subject_id;
  Curie object_id;
  Curie left_predicate;
  Curie right_predicate;

  friend bool operator==(const PredicateConflict&, const PredicateConflict&) = default;
  friend auto operator<=>(const PredicateConflict&, const PredicateConflict&) = default;
};

struct DiffReport {
  std::vector<MappingKey> common;
  std::vector<MappingKey> only_left;
  std::vector<MappingKey> only_right;
  std::vector<PredicateConflict> predicate_conflicts;

  friend bool operator==(const DiffReport&, const DiffReport&) = default;
};

// Compares assertions only (metadata differences are not reported). A
// predicate conflict pairs a predicate only the left uses for (s, o) with one
// only the right uses.
DiffReport diff(const MappingSet& left, const MappingSet& right);

struct InvertResult {
  MappingSet set;
  std::vector<MappingKey> dropped;
};

// Swaps subject and object side slots and inverts the predicate; rows with a
// non-invertible predicate are dropped and reported.
InvertResult invert(const MappingSet& set);

Mapping invert_mapping(const Mapping& m, const Curie& inverse_predicate);

}  // namespace sssom

#endif  // SSSOM_TRANSFORMS_HPP_
