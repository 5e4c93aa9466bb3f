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

#include "sssom/model.hpp"

#include <algorithm>

namespace sssom {
namespace {

struct SlotInfo {
  MappingSlot slot;
  std::string_view name;
  SlotKind kind;
};

constexpr std::array<SlotInfo, kMappingSlotCount> kSlotTable = {{
    {MappingSlot::SubjectId, "subject_id", SlotKind::Curie},
    {MappingSlot::PredicateId, "predicate_id", SlotKind::Curie},
    {MappingSlot::ObjectId, "object_id", SlotKind::Curie},
    {MappingSlot::MatchType, "match_type", SlotKind::MatchType},
    {MappingSlot::SubjectLabel, "subject_label", SlotKind::Text},
    {MappingSlot::ObjectLabel, "object_label", SlotKind::Text},
    {MappingSlot::PredicateModifier, "predicate_modifier", SlotKind::Modifier},
    {MappingSlot::SubjectSource, "subject_source", SlotKind::Text},
    {MappingSlot::SubjectSourceVersion, "subject_source_version", SlotKind::Text},
    {MappingSlot::ObjectSource, "object_source", SlotKind::Text},
    {MappingSlot::ObjectSourceVersion, "object_source_version", SlotKind::Text},
    {MappingSlot::Confidence, "confidence", SlotKind::Decimal},
    {MappingSlot::SubjectMatchField, "subject_match_field", SlotKind::CurieList},
    {MappingSlot::ObjectMatchField, "object_match_field", SlotKind::CurieList},
    {MappingSlot::MatchString, "match_string", SlotKind::TextList},
    {MappingSlot::Preprocessing, "preprocessing", SlotKind::TextList},
    {MappingSlot::SemanticSimilarityScore, "semantic_similarity_score", SlotKind::Decimal},
    {MappingSlot::SemanticSimilarityMeasure, "semantic_similarity_measure", SlotKind::Text},
    {MappingSlot::MappingTool, "mapping_tool", SlotKind::Text},
    {MappingSlot::MappingToolVersion, "mapping_tool_version", SlotKind::Text},
    {MappingSlot::AuthorId, "author_id", SlotKind::CurieList},
    {MappingSlot::CreatorId, "creator_id", SlotKind::CurieList},
    {MappingSlot::ReviewerId, "reviewer_id", SlotKind::CurieList},
    {MappingSlot::MappingDate, "mapping_date", SlotKind::Date},
    {MappingSlot::PublicationDate, "publication_date", SlotKind::Date},
    {MappingSlot::MappingProvider, "mapping_provider", SlotKind::Text},
    {MappingSlot::Comment, "comment", SlotKind::Text},
}};

constexpr std::array<std::string_view, kSetSlotCount> kSetSlotNames = {
    "mapping_set_id", "mapping_set_version", "license",          "creator_id", "mapping_provider",
    "mapping_tool",   "mapping_date",        "publication_date", "comment",    "curie_map"};

const SlotInfo& info(MappingSlot slot) { return kSlotTable[static_cast<std::size_t>(slot)]; }

std::string join_curies(const std::vector<Curie>& items) {
  std::string out;
  for (const auto& c : items) {
    if (!out.empty()) out.push_back('|');
    out += c.str();
  }
  return out;
}

std::string join_text(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back('|');
    out += items[i];
  }
  return out;
}

std::string opt_decimal(const std::optional<Decimal>& d) { return d ? d->text() : std::string(); }
std::string opt_date(const std::optional<Date>& d) { return d ? d->str() : std::string(); }

}  // namespace

const std::array<MappingSlot, kMappingSlotCount>& mapping_slots() {
  static const auto kSlots = [] {
    std::array<MappingSlot, kMappingSlotCount> out{};
    for (std::size_t i = 0; i < kMappingSlotCount; ++i) out[i] = kSlotTable[i].slot;
    return out;
  }();
  return kSlots;
}

std::string_view slot_name(MappingSlot slot) { return info(slot).name; }
SlotKind slot_kind(MappingSlot slot) { return info(slot).kind; }

std::optional<MappingSlot> mapping_slot_by_name(std::string_view name) {
  for (const auto& s : kSlotTable)
    if (s.name == name) return s.slot;
  return std::nullopt;
}

bool is_required(MappingSlot slot) {
  return slot == MappingSlot::SubjectId || slot == MappingSlot::PredicateId ||
         slot == MappingSlot::ObjectId || slot == MappingSlot::MatchType;
}

std::string render_cell(const Mapping& m, MappingSlot slot) {
  switch (slot) {
    case MappingSlot::SubjectId: return m.subject_id.str();
    case MappingSlot::PredicateId: return m.predicate_id.str();
    case MappingSlot::ObjectId: return m.object_id.str();
    case MappingSlot::MatchType:
      return m.match_type ? std::string(to_string(*m.match_type)) : m.unknown_match_type;
    case MappingSlot::SubjectLabel: return m.subject_label;
    case MappingSlot::ObjectLabel: return m.object_label;
    case MappingSlot::PredicateModifier: return std::string(to_string(m.predicate_modifier));
    case MappingSlot::SubjectSource: return m.subject_source;
    case MappingSlot::SubjectSourceVersion: return m.subject_source_version;
    case MappingSlot::ObjectSource: return m.object_source;
    case MappingSlot::ObjectSourceVersion: return m.object_source_version;
    case MappingSlot::Confidence: return opt_decimal(m.confidence);
    case MappingSlot::SubjectMatchField: return join_curies(m.subject_match_field);
    case MappingSlot::ObjectMatchField: return join_curies(m.object_match_field);
    case MappingSlot::MatchString: return join_text(m.match_string);
    case MappingSlot::Preprocessing: return join_text(m.preprocessing);
    case MappingSlot::SemanticSimilarityScore: return opt_decimal(m.semantic_similarity_score);
    case MappingSlot::SemanticSimilarityMeasure: return m.semantic_similarity_measure;
    case MappingSlot::MappingTool: return m.mapping_tool;
    case MappingSlot::MappingToolVersion: return m.mapping_tool_version;
    case MappingSlot::AuthorId: return join_curies(m.author_id);
    case MappingSlot::CreatorId: return join_curies(m.creator_id);
    case MappingSlot::ReviewerId: return join_curies(m.reviewer_id);
    case MappingSlot::MappingDate: return opt_date(m.mapping_date);
    case MappingSlot::PublicationDate: return opt_date(m.publication_date);
    case MappingSlot::MappingProvider: return m.mapping_provider;
    case MappingSlot::Comment: return m.comment;
  }
  return {};
}

const std::array<SetSlot, kSetSlotCount>& set_slots() {
  static const auto kSlots = [] {
    std::array<SetSlot, kSetSlotCount> out{};
    for (std::size_t i = 0; i < kSetSlotCount; ++i) out[i] = static_cast<SetSlot>(i);
    return out;
  }();
  return kSlots;
}

std::string_view slot_name(SetSlot slot) { return kSetSlotNames[static_cast<std::size_t>(slot)]; }

std::optional<SetSlot> set_slot_by_name(std::string_view name) {
  for (std::size_t i = 0; i < kSetSlotCount; ++i)
    if (kSetSlotNames[i] == name) return static_cast<SetSlot>(i);
  return std::nullopt;
}

void apply_set_defaults(MappingSet& set) {
  for (auto& m : set.mappings) {
    if (m.mapping_tool.empty()) m.mapping_tool = set.mapping_tool;
    if (!m.mapping_date) m.mapping_date = set.mapping_date;
    if (m.creator_id.empty()) m.creator_id = set.creator_id;
    if (m.mapping_provider.empty()) m.mapping_provider = set.mapping_provider;
  }
}

std::string MappingKey::str() const {
  std::string out = subject_id.str();
  out += ' ';
  if (predicate_modifier == PredicateModifier::Not) out += "Not ";
  out += predicate_id.str();
  out += ' ';
  out += object_id.str();
  return out;
}

std::strong_ordering operator<=>(const MappingKey& a, const MappingKey& b) {
  if (auto c = a.subject_id <=> b.subject_id; c != 0) return c;
  if (auto c = a.predicate_id <=> b.predicate_id; c != 0) return c;
  if (auto c = a.object_id <=> b.object_id; c != 0) return c;
  return a.predicate_modifier <=> b.predicate_modifier;
}

MappingKey key_of(const Mapping& m) {
  return {m.subject_id, m.predicate_id, m.object_id, m.predicate_modifier};
}

}  // namespace sssom
