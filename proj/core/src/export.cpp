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

#include "sssom/export.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "sssom/tsv.hpp"
#include "unicode.hpp"

namespace sssom {
namespace {

// ---------------------------------------------------------------------------
// JSON

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

bool is_json_number(std::string_view t) {
  std::size_t i = t.starts_with('-') ? 1 : 0;
  // Leading zeros are not allowed in JSON ("01").
  return !(t.size() > i + 1 && t[i] == '0' && t[i + 1] >= '0' && t[i + 1] <= '9');
}

std::string json_decimal(const Decimal& d) {
  return is_json_number(d.text()) ? d.text() : json_string(d.text());
}

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += json_string(items[i]);
  }
  return out + "]";
}

std::vector<std::string> curie_strings(const std::vector<Curie>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& c : ids) out.push_back(c.str());
  return out;
}

using Members = std::vector<std::pair<std::string, std::string>>;

std::string json_object(const Members& members, std::size_t indent) {
  if (members.empty()) return "{}";
  const std::string pad(indent + 2, ' ');
  std::string out = "{\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out += pad + json_string(members[i].first) + ": " + members[i].second;
    out += i + 1 < members.size() ? ",\n" : "\n";
  }
  return out + std::string(indent, ' ') + "}";
}

std::string json_header_value(const HeaderValue& v, std::size_t indent) {
  switch (v.kind) {
    case HeaderValue::Kind::Scalar: return json_string(v.scalar);
    case HeaderValue::Kind::List: return json_array(v.list);
    case HeaderValue::Kind::Map: {
      Members members;
      for (const auto& [k, val] : v.map) members.emplace_back(k, json_string(val));
      return json_object(members, indent);
    }
  }
  return "null";
}

std::string json_mapping(const Mapping& m, std::size_t indent) {
  Members members;
  for (auto slot : mapping_slots()) {
    const auto name = std::string(slot_name(slot));
    switch (slot_kind(slot)) {
      case SlotKind::CurieList: {
        const auto& list = slot == MappingSlot::SubjectMatchField ? m.subject_match_field
                           : slot == MappingSlot::ObjectMatchField ? m.object_match_field
                           : slot == MappingSlot::AuthorId         ? m.author_id
                           : slot == MappingSlot::CreatorId        ? m.creator_id
                                                                   : m.reviewer_id;
        if (!list.empty()) members.emplace_back(name, json_array(curie_strings(list)));
        break;
      }
      case SlotKind::TextList: {
        const auto& list = slot == MappingSlot::MatchString ? m.match_string : m.preprocessing;
        if (!list.empty()) members.emplace_back(name, json_array(list));
        break;
      }
      case SlotKind::Decimal: {
        const auto& d = slot == MappingSlot::Confidence ? m.confidence : m.semantic_similarity_score;
        if (d) members.emplace_back(name, json_decimal(*d));
        break;
      }
      default: {
        const auto cell = render_cell(m, slot);
        if (!cell.empty()) members.emplace_back(name, json_string(cell));
      }
    }
  }
  for (const auto& [k, v] : m.extensions)
    if (!v.empty()) members.emplace_back(k, json_string(v));
  return json_object(members, indent);
}

// ---------------------------------------------------------------------------
// N-Triples

void append_uchar(std::string& out, char32_t cp) {
  char buf[16];
  if (cp <= 0xFFFF)
    std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(cp));
  else
    std::snprintf(buf, sizeof buf, "\\U%08X", static_cast<unsigned>(cp));
  out += buf;
}

std::string nt_iri(std::string_view iri) {
  std::string out = "<";
  for (char32_t cp : unicode::decode(iri)) {
    const bool forbidden = cp <= 0x20 || cp == '<' || cp == '>' || cp == '"' || cp == '{' ||
                           cp == '}' || cp == '|' || cp == '^' || cp == '`' || cp == '\\';
    if (forbidden || cp > 0x7E)
      append_uchar(out, cp);
    else
      out.push_back(static_cast<char>(cp));
  }
  return out + ">";
}

std::string nt_literal(std::string_view text, const char* datatype = nullptr) {
  std::string out = "\"";
  for (char32_t cp : unicode::decode(text)) {
    switch (cp) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (cp < 0x20 || cp > 0x7E)
          append_uchar(out, cp);
        else
          out.push_back(static_cast<char>(cp));
    }
  }
  out.push_back('"');
  if (datatype) out += std::string("^^<") + datatype + ">";
  return out;
}

constexpr const char* kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
constexpr const char* kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";

__extension__ typedef unsigned __int128 uint128;

// 128-bit FNV-1a.
uint128 fnv1a128(std::string_view data) {
  uint128 hash = (static_cast<uint128>(0x6c62272e07bb0142ULL) << 64) |
                           0x62b821756295c58dULL;
  const uint128 prime = (static_cast<uint128>(1) << 88) | 0x13B;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= prime;
  }
  return hash;
}

// RFC 9562 version 8 (custom) UUID from a hash.
std::string uuid_v8(uint128 h) {
  unsigned char bytes[16];
  for (int i = 15; i >= 0; --i) {
    bytes[i] = static_cast<unsigned char>(h & 0xFF);
    h >>= 8;
  }
  bytes[6] = static_cast<unsigned char>((bytes[6] & 0x0F) | 0x80);
  bytes[8] = static_cast<unsigned char>((bytes[8] & 0x3F) | 0x80);
  char buf[40];
  std::snprintf(buf, sizeof buf,
                "%02x%02x%02x%02x-%02x%02x-%02x%02x-%02x%02x-%02x%02x%02x%02x%02x%02x", bytes[0],
                bytes[1], bytes[2], bytes[3], bytes[4], bytes[5], bytes[6], bytes[7], bytes[8],
                bytes[9], bytes[10], bytes[11], bytes[12], bytes[13], bytes[14], bytes[15]);
  return buf;
}

}  // namespace

std::string to_json(const MappingSet& set) {
  Members top;
  auto text = [&](SetSlot slot, const std::string& value) {
    if (!value.empty()) top.emplace_back(std::string(slot_name(slot)), json_string(value));
  };
  text(SetSlot::MappingSetId, set.mapping_set_id);
  text(SetSlot::MappingSetVersion, set.mapping_set_version);
  text(SetSlot::License, set.license);
  if (!set.creator_id.empty()) top.emplace_back("creator_id", json_array(curie_strings(set.creator_id)));
  text(SetSlot::MappingProvider, set.mapping_provider);
  text(SetSlot::MappingTool, set.mapping_tool);
  if (set.mapping_date) text(SetSlot::MappingDate, set.mapping_date->str());
  if (set.publication_date) text(SetSlot::PublicationDate, set.publication_date->str());
  text(SetSlot::Comment, set.comment);
  if (!set.curie_map.empty()) {
    Members prefixes;
    for (const auto& [p, iri] : set.curie_map.entries()) prefixes.emplace_back(p, json_string(iri));
    top.emplace_back("curie_map", json_object(prefixes, 2));
  }
  for (const auto& [key, value] : set.set_extensions)
    top.emplace_back(key, json_header_value(value, 2));

  std::vector<Mapping> rows = set.mappings;
  sort_canonical(rows);
  std::string mappings = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mappings += i ? ",\n    " : "\n    ";
    mappings += json_mapping(rows[i], 4);
  }
  mappings += rows.empty() ? "]" : "\n  ]";
  top.emplace_back("mappings", mappings);
  return json_object(top, 0) + "\n";
}

std::string to_ntriples(const MappingSet& set, bool emit_direct, bool use_builtin_prefixes) {
  std::vector<Mapping> rows = set.mappings;
  sort_canonical(rows);

  std::string canonical;
  if (set.mapping_set_id.empty()) canonical = serialize_canonical(set);

  auto iri_of = [&](const Curie& c) { return nt_iri(expand(c, set.curie_map, use_builtin_prefixes)); };
  const std::string ns = kSssomNamespace;

  std::vector<std::string> lines;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Mapping& m = rows[i];
    const std::string index = std::to_string(i + 1);
    const std::string node =
        set.mapping_set_id.empty()
            ? nt_iri("urn:uuid:" + uuid_v8(fnv1a128(canonical + "\n" + index)))
            : nt_iri(set.mapping_set_id + "/mapping/" + index);

    auto triple = [&](std::string_view slot, const std::string& object) {
      lines.push_back(node + " " + nt_iri(ns + std::string(slot)) + " " + object + " .");
    };

    for (auto slot : mapping_slots()) {
      const auto name = slot_name(slot);
      switch (slot_kind(slot)) {
        case SlotKind::Curie: {
          const Curie& c = slot == MappingSlot::SubjectId     ? m.subject_id
                           : slot == MappingSlot::PredicateId ? m.predicate_id
                                                              : m.object_id;
          if (!c.empty()) triple(name, iri_of(c));
          break;
        }
        case SlotKind::CurieList: {
          const auto& list = slot == MappingSlot::SubjectMatchField ? m.subject_match_field
                             : slot == MappingSlot::ObjectMatchField ? m.object_match_field
                             : slot == MappingSlot::AuthorId         ? m.author_id
                             : slot == MappingSlot::CreatorId        ? m.creator_id
                                                                     : m.reviewer_id;
          for (const auto& c : list) triple(name, iri_of(c));
          break;
        }
        case SlotKind::TextList: {
          const auto& list = slot == MappingSlot::MatchString ? m.match_string : m.preprocessing;
          for (const auto& s : list) triple(name, nt_literal(s));
          break;
        }
        case SlotKind::Decimal: {
          const auto& d = slot == MappingSlot::Confidence ? m.confidence : m.semantic_similarity_score;
          if (d) triple(name, nt_literal(d->text(), kXsdDouble));
          break;
        }
        case SlotKind::Date: {
          const auto& d = slot == MappingSlot::MappingDate ? m.mapping_date : m.publication_date;
          if (d) triple(name, nt_literal(d->str(), kXsdDate));
          break;
        }
        default: {
          const auto cell = render_cell(m, slot);
          if (!cell.empty()) triple(name, nt_literal(cell));
        }
      }
    }
    if (emit_direct && m.predicate_modifier == PredicateModifier::None)
      lines.push_back(iri_of(m.subject_id) + " " + iri_of(m.predicate_id) + " " +
                      iri_of(m.object_id) + " .");
  }

  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

}  // namespace sssom
