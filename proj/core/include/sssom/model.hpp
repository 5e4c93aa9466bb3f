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

#ifndef SSSOM_MODEL_HPP_
#define SSSOM_MODEL_HPP_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sssom/curie.hpp"
#include "sssom/values.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

// One mapping row. Empty strings, empty lists and empty Curies mean "absent".
struct Mapping {
  Curie subject_id;
  Curie predicate_id;
  Curie object_id;
  std::optional<MatchType> match_type;
  // Raw match_type cell that normalization did not recognize (lenient mode).
  std::string unknown_match_type;

  std::string subject_label;
  std::string object_label;
  PredicateModifier predicate_modifier = PredicateModifier::None;
  std::string subject_source;
  std::string subject_source_version;
  std::string object_source;
  std::string object_source_version;
  std::optional<Decimal> confidence;
  std::vector<Curie> subject_match_field;
  std::vector<Curie> object_match_field;
  std::vector<std::string> match_string;
  std::vector<std::string> preprocessing;
  std::optional<Decimal> semantic_similarity_score;
  std::string semantic_similarity_measure;
  std::string mapping_tool;
  std::string mapping_tool_version;
  std::vector<Curie> author_id;
  std::vector<Curie> creator_id;
  std::vector<Curie> reviewer_id;
  std::optional<Date> mapping_date;
  std::optional<Date> publication_date;
  std::string mapping_provider;
  std::string comment;

  // Unrecognized column -> raw cell text.
  std::map<std::string, std::string> extensions;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

// Value of a header key: scalar, block list, or one-level map.
struct HeaderValue {
  enum class Kind { Scalar, List, Map };

  Kind kind = Kind::Scalar;
  std::string scalar;
  std::vector<std::string> list;
  std::vector<std::pair<std::string, std::string>> map;

  static HeaderValue of_scalar(std::string s) { return {Kind::Scalar, std::move(s), {}, {}}; }
  static HeaderValue of_list(std::vector<std::string> items) {
    return {Kind::List, {}, std::move(items), {}};
  }

  friend bool operator==(const HeaderValue&, const HeaderValue&) = default;
};

struct MappingSet {
  std::string mapping_set_id;
  std::string mapping_set_version;
  std::string license;
  std::vector<Curie> creator_id;
  std::string mapping_provider;
  std::string mapping_tool;
  std::optional<Date> mapping_date;
  std::optional<Date> publication_date;
  std::string comment;
  PrefixMap curie_map;
  std::vector<Mapping> mappings;
  std::map<std::string, HeaderValue> set_extensions;

  friend bool operator==(const MappingSet&, const MappingSet&) = default;
};

// Copies set-level mapping_tool, mapping_date, creator_id and
// mapping_provider into rows that leave them empty.
void apply_set_defaults(MappingSet& set);

// Identity of an assertion: two rows say the same thing iff keys are equal.
struct MappingKey {
  Curie subject_id;
  Curie predicate_id;
  Curie object_id;
  PredicateModifier predicate_modifier = PredicateModifier::None;

  std::string str() const;

  friend bool operator==(const MappingKey&, const MappingKey&) = default;
  friend std::strong_ordering operator<=>(const MappingKey& a, const MappingKey& b);
};

MappingKey key_of(const Mapping& m);

// Mapping-level columns in canonical order; the four required come first.
enum class MappingSlot {
  SubjectId,
  PredicateId,
  ObjectId,
  MatchType,
  SubjectLabel,
  ObjectLabel,
  PredicateModifier,
  SubjectSource,
  SubjectSourceVersion,
  ObjectSource,
  ObjectSourceVersion,
  Confidence,
  SubjectMatchField,
  ObjectMatchField,
  MatchString,
  Preprocessing,
  SemanticSimilarityScore,
  SemanticSimilarityMeasure,
  MappingTool,
  MappingToolVersion,
  AuthorId,
  CreatorId,
  ReviewerId,
  MappingDate,
  PublicationDate,
  MappingProvider,
  Comment,
};

enum class SlotKind { Curie, CurieList, Text, TextList, Decimal, Date, MatchType, Modifier };

inline constexpr std::size_t kMappingSlotCount = 27;

const std::array<MappingSlot, kMappingSlotCount>& mapping_slots();
std::string_view slot_name(MappingSlot slot);
SlotKind slot_kind(MappingSlot slot);
std::optional<MappingSlot> mapping_slot_by_name(std::string_view name);
bool is_required(MappingSlot slot);

// Cell text exactly as it would be written to TSV ("" when absent).
std::string render_cell(const Mapping& m, MappingSlot slot);

// Set-level header keys in canonical order.
enum class SetSlot {
  MappingSetId,
  MappingSetVersion,
  License,
  CreatorId,
  MappingProvider,
  MappingTool,
  MappingDate,
  PublicationDate,
  Comment,
  CurieMap,
};

inline constexpr std::size_t kSetSlotCount = 10;

const std::array<SetSlot, kSetSlotCount>& set_slots();
std::string_view slot_name(SetSlot slot);
std::optional<SetSlot> set_slot_by_name(std::string_view name);

}  // namespace sssom

#endif  // SSSOM_MODEL_HPP_
