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

#include "sssom/tsv.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <variant>

#include "sssom/errors.hpp"
#include "sssom/header.hpp"
#include "unicode.hpp"

namespace sssom {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Lines without their terminators; a trailing LF does not open a new line.
std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < s.size()) {
    auto pos = s.find('\n', start);
    if (pos == std::string_view::npos) pos = s.size();
    std::string_view line = s.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = pos + 1;
  }
  return lines;
}

class RowSink {
 public:
  RowSink(std::vector<Diagnostic>& out, std::size_t row) : out_(out), row_(row) {}

  void report(std::string code, std::string_view slot, std::string message) {
    const Severity severity = default_severity(code);
    report(std::move(code), slot, std::move(message), severity);
  }
  void report(std::string code, std::string_view slot, std::string message, Severity severity) {
    out_.push_back({std::move(code), severity, row_, std::string(slot), std::move(message)});
  }
  void reject() { rejected_ = true; }
  bool rejected() const { return rejected_; }

 private:
  std::vector<Diagnostic>& out_;
  std::optional<std::size_t> row_;
  bool rejected_ = false;
};

std::vector<Curie> parse_curie_list(std::string_view cell, std::string_view slot, RowSink& sink) {
  std::vector<Curie> out;
  for (auto item : split(cell, '|')) {
    if (item.empty()) continue;
    if (auto c = Curie::parse(item)) {
      out.push_back(std::move(*c));
    } else {
      sink.report("E008", slot, "'" + std::string(item) + "' is not a well-formed CURIE");
    }
  }
  return out;
}

std::vector<std::string> parse_text_list(std::string_view cell) {
  std::vector<std::string> out;
  for (auto item : split(cell, '|'))
    if (!item.empty()) out.emplace_back(item);
  return out;
}

Curie parse_required_curie(std::string_view cell, std::string_view slot, RowSink& sink) {
  if (auto c = Curie::parse(cell)) return std::move(*c);
  sink.report("E008", slot, "'" + std::string(cell) + "' is not a well-formed CURIE");
  sink.reject();
  return {};
}

std::optional<Decimal> parse_decimal_cell(std::string_view cell, std::string_view slot,
                                          RowSink& sink) {
  if (auto d = Decimal::parse(cell)) return d;
  sink.report("E012", slot, "'" + std::string(cell) + "' is not a number");
  return std::nullopt;
}

std::optional<Date> parse_date_cell(std::string_view cell, std::string_view slot, RowSink& sink) {
  if (auto d = Date::parse(cell)) return d;
  sink.report("E006", slot, "'" + std::string(cell) + "' is not a YYYY-MM-DD date");
  return std::nullopt;
}

// Fills one slot from a non-empty cell.
void assign_cell(Mapping& m, MappingSlot slot, std::string_view cell, ParseMode mode,
                 std::vector<std::string>& extra_preprocessing, RowSink& sink) {
  const auto name = slot_name(slot);
  switch (slot) {
    case MappingSlot::SubjectId: m.subject_id = parse_required_curie(cell, name, sink); break;
    case MappingSlot::PredicateId: m.predicate_id = parse_required_curie(cell, name, sink); break;
    case MappingSlot::ObjectId: m.object_id = parse_required_curie(cell, name, sink); break;
    case MappingSlot::MatchType:
      try {
        auto normalized = normalize_match_type(cell, mode);
        m.match_type = normalized.type;
        extra_preprocessing = std::move(normalized.extra_preprocessing);
      } catch (const UnknownMatchType&) {
        if (mode == ParseMode::Strict) {
          sink.report("E005", name, "unknown match_type '" + std::string(cell) + "'",
                      Severity::Error);
          sink.reject();
        } else {
          m.unknown_match_type = std::string(cell);
        }
      }
      break;
    case MappingSlot::SubjectLabel: m.subject_label = cell; break;
    case MappingSlot::ObjectLabel: m.object_label = cell; break;
    case MappingSlot::PredicateModifier:
      if (cell == "Not") {
        m.predicate_modifier = PredicateModifier::Not;
      } else {
        sink.report("E010", name, "predicate_modifier '" + std::string(cell) + "' is not 'Not'");
        sink.reject();
      }
      break;
    case MappingSlot::SubjectSource: m.subject_source = cell; break;
    case MappingSlot::SubjectSourceVersion: m.subject_source_version = cell; break;
    case MappingSlot::ObjectSource: m.object_source = cell; break;
    case MappingSlot::ObjectSourceVersion: m.object_source_version = cell; break;
    case MappingSlot::Confidence: m.confidence = parse_decimal_cell(cell, name, sink); break;
    case MappingSlot::SubjectMatchField: m.subject_match_field = parse_curie_list(cell, name, sink); break;
    case MappingSlot::ObjectMatchField: m.object_match_field = parse_curie_list(cell, name, sink); break;
    case MappingSlot::MatchString: m.match_string = parse_text_list(cell); break;
    case MappingSlot::Preprocessing: m.preprocessing = parse_text_list(cell); break;
    case MappingSlot::SemanticSimilarityScore:
      m.semantic_similarity_score = parse_decimal_cell(cell, name, sink);
      break;
    case MappingSlot::SemanticSimilarityMeasure: m.semantic_similarity_measure = cell; break;
    case MappingSlot::MappingTool: m.mapping_tool = cell; break;
    case MappingSlot::MappingToolVersion: m.mapping_tool_version = cell; break;
    case MappingSlot::AuthorId: m.author_id = parse_curie_list(cell, name, sink); break;
    case MappingSlot::CreatorId: m.creator_id = parse_curie_list(cell, name, sink); break;
    case MappingSlot::ReviewerId: m.reviewer_id = parse_curie_list(cell, name, sink); break;
    case MappingSlot::MappingDate: m.mapping_date = parse_date_cell(cell, name, sink); break;
    case MappingSlot::PublicationDate: m.publication_date = parse_date_cell(cell, name, sink); break;
    case MappingSlot::MappingProvider: m.mapping_provider = cell; break;
    case MappingSlot::Comment: m.comment = cell; break;
  }
}

const std::string& require_scalar(const std::string& key, const HeaderValue& value) {
  if (value.kind != HeaderValue::Kind::Scalar)
    throw FatalParse("header key '" + key + "' must be a scalar");
  return value.scalar;
}

void apply_header(const HeaderBlock& block, MappingSet& set, std::vector<Diagnostic>& diags) {
  auto set_level = [&](std::string code, std::string slot, std::string message) {
    diags.push_back({code, default_severity(code), std::nullopt, std::move(slot), std::move(message)});
  };
  for (const auto& [key, value] : block.entries) {
    const auto slot = set_slot_by_name(key);
    if (!slot) {
      set.set_extensions[key] = value;
      continue;
    }
    switch (*slot) {
      case SetSlot::MappingSetId: set.mapping_set_id = require_scalar(key, value); break;
      case SetSlot::MappingSetVersion: set.mapping_set_version = require_scalar(key, value); break;
      case SetSlot::License: set.license = require_scalar(key, value); break;
      case SetSlot::MappingProvider: set.mapping_provider = require_scalar(key, value); break;
      case SetSlot::MappingTool: set.mapping_tool = require_scalar(key, value); break;
      case SetSlot::Comment: set.comment = require_scalar(key, value); break;
      case SetSlot::CreatorId: {
        std::vector<std::string> items;
        if (value.kind == HeaderValue::Kind::List) {
          items = value.list;
        } else {
          items = parse_text_list(require_scalar(key, value));
        }
        set.creator_id.clear();
        for (const auto& item : items) {
          if (auto c = Curie::parse(item))
            set.creator_id.push_back(std::move(*c));
          else
            set_level("E008", key, "'" + item + "' is not a well-formed CURIE");
        }
        break;
      }
      case SetSlot::MappingDate:
      case SetSlot::PublicationDate: {
        const auto& text = require_scalar(key, value);
        std::optional<Date> date;
        if (!text.empty()) {
          date = Date::parse(text);
          if (!date) set_level("E006", key, "'" + text + "' is not a YYYY-MM-DD date");
        }
        (*slot == SetSlot::MappingDate ? set.mapping_date : set.publication_date) = date;
        break;
      }
      case SetSlot::CurieMap: {
        set.curie_map = PrefixMap{};
        if (value.kind == HeaderValue::Kind::Scalar && value.scalar.empty()) break;
        if (value.kind != HeaderValue::Kind::Map)
          throw FatalParse("header key 'curie_map' must be a map of prefix to IRI prefix");
        for (const auto& [prefix, iri] : value.map) {
          if (!is_valid_prefix(prefix)) {
            set_level("E008", key, "'" + prefix + "' is not a valid prefix");
            continue;
          }
          set.curie_map.set(prefix, iri);
        }
        break;
      }
    }
  }
}

[[noreturn]] void throw_first_error(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity != Severity::Error) continue;
    std::string where = d.row ? "row " + std::to_string(*d.row) : std::string("header");
    throw FatalParse(where + ": " + d.code + " " + d.message);
  }
  throw FatalParse("strict mode: parse failed");
}

void check_cell(std::string_view text, std::string_view what) {
  if (text.find_first_of("\t\r\n") != std::string_view::npos)
    throw SerializationError(std::string(what) + " contains a tab or line break");
}

void check_list_items(const std::vector<std::string>& items, std::string_view what) {
  for (const auto& item : items) {
    if (item.empty()) throw SerializationError(std::string(what) + " has an empty list item");
    if (item.find('|') != std::string::npos)
      throw SerializationError(std::string(what) + " list item contains '|'");
  }
}

void check_curie_items(const std::vector<Curie>& items, std::string_view what) {
  for (const auto& c : items) {
    if (c.empty()) throw SerializationError(std::string(what) + " has an empty list item");
    if (c.local_id.find('|') != std::string::npos)
      throw SerializationError(std::string(what) + " list item contains '|'");
  }
}

void check_mapping_lists(const Mapping& m) {
  check_curie_items(m.subject_match_field, "subject_match_field");
  check_curie_items(m.object_match_field, "object_match_field");
  check_list_items(m.match_string, "match_string");
  check_list_items(m.preprocessing, "preprocessing");
  check_curie_items(m.author_id, "author_id");
  check_curie_items(m.creator_id, "creator_id");
  check_curie_items(m.reviewer_id, "reviewer_id");
}

std::vector<std::string> extension_columns(const std::vector<Mapping>& mappings) {
  std::set<std::string> names;
  for (const auto& m : mappings)
    for (const auto& [k, v] : m.extensions)
      if (!v.empty()) names.insert(k);
  return {names.begin(), names.end()};
}

std::vector<std::string> render_row(const Mapping& m, const std::vector<MappingSlot>& slots,
                                    const std::vector<std::string>& ext) {
  std::vector<std::string> cells;
  cells.reserve(slots.size() + ext.size());
  for (auto s : slots) cells.push_back(render_cell(m, s));
  for (const auto& name : ext) {
    auto it = m.extensions.find(name);
    cells.push_back(it == m.extensions.end() ? std::string() : it->second);
  }
  return cells;
}

}  // namespace

ParsedDocument parse_embedded(std::string_view input, ParseMode mode) {
  if (!unicode::valid_utf8(input)) throw FatalParse("input is not valid UTF-8");
  ParsedDocument doc;
  auto& diags = doc.diagnostics;
  if (input.starts_with(kBom)) {
    input.remove_prefix(kBom.size());
    diags.push_back({"P002", default_severity("P002"), std::nullopt, "", "byte order mark consumed"});
  }

  const auto lines = split_lines(input);
  std::size_t i = 0;
  std::vector<std::string_view> header_lines;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    if (lines[i][0] != '#') break;
    header_lines.push_back(lines[i].substr(1));
  }
  const HeaderBlock block = parse_header_block(header_lines, diags);
  apply_header(block, doc.set, diags);

  if (i == lines.size()) throw FatalParse("no column header line");
  for (auto name : split(lines[i], '\t')) doc.column_order.emplace_back(name);
  ++i;

  std::vector<std::optional<MappingSlot>> columns;
  {
    std::set<std::string_view> seen;
    for (const auto& name : doc.column_order) {
      if (name.empty()) throw FatalParse("empty column name in column header");
      if (!seen.insert(name).second) throw FatalParse("duplicate column '" + name + "'");
      columns.push_back(mapping_slot_by_name(name));
    }
    for (auto required : {MappingSlot::SubjectId, MappingSlot::PredicateId, MappingSlot::ObjectId,
                          MappingSlot::MatchType}) {
      if (!seen.contains(slot_name(required)))
        throw FatalParse("required column '" + std::string(slot_name(required)) + "' is missing");
    }
  }

  std::vector<std::string> extra_preprocessing;
  for (; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty()) continue;
    if (line[0] == '#') throw FatalParse("'#' line after the column header");
    const std::size_t row = ++doc.rows_read;
    RowSink sink(diags, row);
    const auto cells = split(line, '\t');
    if (cells.size() != columns.size()) {
      sink.report("P001", "",
                  "row has " + std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(columns.size()));
      ++doc.rejected_rows;
      continue;
    }
    Mapping m;
    extra_preprocessing.clear();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) continue;
      if (columns[c])
        assign_cell(m, *columns[c], cells[c], mode, extra_preprocessing, sink);
      else
        m.extensions.emplace(doc.column_order[c], cells[c]);
    }
    if (sink.rejected()) {
      ++doc.rejected_rows;
      continue;
    }
    for (auto& token : extra_preprocessing)
      if (std::find(m.preprocessing.begin(), m.preprocessing.end(), token) == m.preprocessing.end())
        m.preprocessing.push_back(std::move(token));
    doc.set.mappings.push_back(std::move(m));
    doc.source_rows.push_back(row);
  }

  if (!block.find("curie_map"))
    diags.push_back({"P005", default_severity("P005"), std::nullopt, "curie_map",
                     "no curie_map in the header; only built-in prefixes resolve"});
  if (doc.rows_read == 0)
    diags.push_back({"P006", default_severity("P006"), std::nullopt, "", "mapping table is empty"});

  apply_set_defaults(doc.set);
  sort_diagnostics(diags);
  if (mode == ParseMode::Strict && has_errors(diags)) throw_first_error(diags);
  return doc;
}

std::string embed(std::string_view tsv, std::string_view header) {
  if (!unicode::valid_utf8(tsv) || !unicode::valid_utf8(header))
    throw FatalParse("input is not valid UTF-8");
  std::string out;
  out.reserve(tsv.size() + header.size() + 64);
  if (tsv.starts_with(kBom)) {
    out += kBom;
    tsv.remove_prefix(kBom.size());
  }
  if (header.starts_with(kBom)) header.remove_prefix(kBom.size());
  for (auto line : split_lines(header)) {
    out.push_back('#');
    out += line;
    out.push_back('\n');
  }
  out += tsv;
  return out;
}

ParsedDocument parse_external(std::string_view tsv, std::string_view header, ParseMode mode) {
  ParsedDocument doc = parse_embedded(embed(tsv, header), mode);

  if (tsv.starts_with(kBom)) tsv.remove_prefix(kBom.size());
  std::vector<std::string_view> embedded_lines;
  for (auto line : split_lines(tsv)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    embedded_lines.push_back(line.substr(1));
  }
  if (embedded_lines.empty()) return doc;

  if (header.starts_with(kBom)) header.remove_prefix(kBom.size());
  std::vector<Diagnostic> scratch;
  const HeaderBlock external = parse_header_block(split_lines(header), scratch);
  const HeaderBlock embedded = parse_header_block(embedded_lines, scratch);

  std::set<std::string> shared;
  for (const auto& [key, value] : external.entries)
    if (embedded.find(key)) shared.insert(key);
  // Cross-source duplicates are reported as conflicts, not as P003.
  std::erase_if(doc.diagnostics, [&](const Diagnostic& d) {
    return d.code == "P003" && !d.row && shared.contains(d.slot);
  });
  doc.diagnostics.push_back({"P007", default_severity("P007"), std::nullopt, "",
                             "body carries its own header; embedded values win"});
  for (const auto& key : shared) {
    if (*external.find(key) == *embedded.find(key)) continue;
    doc.diagnostics.push_back({"P004", default_severity("P004"), std::nullopt, key,
                               "ConflictingHeaders: '" + key +
                                   "' differs between external and embedded header; embedded wins"});
  }
  sort_diagnostics(doc.diagnostics);
  return doc;
}

std::string serialize_canonical(const MappingSet& set) {
  std::string out;
  auto header_line = [&](std::string_view key, const HeaderValue& value) {
    for (const auto& line : render_header_entry(key, value)) {
      out.push_back('#');
      out += line;
      out.push_back('\n');
    }
  };
  auto scalar = [&](SetSlot slot, const std::string& value) {
    if (!value.empty()) header_line(slot_name(slot), HeaderValue::of_scalar(value));
  };

  scalar(SetSlot::MappingSetId, set.mapping_set_id);
  scalar(SetSlot::MappingSetVersion, set.mapping_set_version);
  scalar(SetSlot::License, set.license);
  if (!set.creator_id.empty()) {
    check_curie_items(set.creator_id, "creator_id");
    std::vector<std::string> items;
    for (const auto& c : set.creator_id) items.push_back(c.str());
    header_line(slot_name(SetSlot::CreatorId), HeaderValue::of_list(std::move(items)));
  }
  scalar(SetSlot::MappingProvider, set.mapping_provider);
  scalar(SetSlot::MappingTool, set.mapping_tool);
  if (set.mapping_date) scalar(SetSlot::MappingDate, set.mapping_date->str());
  if (set.publication_date) scalar(SetSlot::PublicationDate, set.publication_date->str());
  scalar(SetSlot::Comment, set.comment);
  if (!set.curie_map.empty()) {
    HeaderValue map;
    map.kind = HeaderValue::Kind::Map;
    for (const auto& [prefix, iri] : set.curie_map.entries()) map.map.emplace_back(prefix, iri);
    header_line(slot_name(SetSlot::CurieMap), map);
  }
  for (const auto& [key, value] : set.set_extensions) {
    if (set_slot_by_name(key)) throw SerializationError("set extension '" + key + "' shadows a slot");
    check_cell(key, "set extension key");
    header_line(key, value);
  }

  std::vector<MappingSlot> slots;
  for (auto s : mapping_slots()) {
    if (is_required(s)) {
      slots.push_back(s);
      continue;
    }
    const bool used = std::any_of(set.mappings.begin(), set.mappings.end(),
                                  [&](const Mapping& m) { return !render_cell(m, s).empty(); });
    if (used) slots.push_back(s);
  }
  const auto ext = extension_columns(set.mappings);
  for (const auto& name : ext) {
    if (mapping_slot_by_name(name)) throw SerializationError("extension column '" + name + "' shadows a slot");
    if (name.empty() || name.find_first_of("\t\r\n") != std::string::npos)
      throw SerializationError("extension column name '" + name + "' is not representable");
  }

  std::vector<std::vector<std::string>> rows;
  rows.reserve(set.mappings.size());
  for (const auto& m : set.mappings) {
    check_mapping_lists(m);
    rows.push_back(render_row(m, slots, ext));
    for (const auto& cell : rows.back()) check_cell(cell, "cell '" + cell + "'");
  }
  std::sort(rows.begin(), rows.end());

  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (c) out.push_back('\t');
    out += slot_name(slots[c]);
  }
  for (const auto& name : ext) {
    out.push_back('\t');
    out += name;
  }
  out.push_back('\n');
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.push_back('\t');
      out += row[c];
    }
    out.push_back('\n');
  }
  return out;
}

void sort_canonical(std::vector<Mapping>& mappings) {
  const std::vector<MappingSlot> slots(mapping_slots().begin(), mapping_slots().end());
  const auto ext = extension_columns(mappings);
  std::vector<std::vector<std::string>> keys;
  keys.reserve(mappings.size());
  for (const auto& m : mappings) keys.push_back(render_row(m, slots, ext));
  std::vector<std::size_t> order(mappings.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Mapping> sorted;
  sorted.reserve(mappings.size());
  for (auto idx : order) sorted.push_back(std::move(mappings[idx]));
  mappings = std::move(sorted);
}

}  // namespace sssom
