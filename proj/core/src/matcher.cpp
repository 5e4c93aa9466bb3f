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

#include "sssom/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sssom/errors.hpp"
#include "sssom/header.hpp"
#include "sssom/tsv.hpp"
#include "unicode.hpp"

namespace sssom {
namespace {

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

std::vector<std::string> split_list(std::string_view cell) {
  std::vector<std::string> out;
  if (cell.empty()) return out;
  for (auto item : split(cell, '|'))
    if (!item.empty()) out.emplace_back(item);
  return out;
}

// ---------------------------------------------------------------------------
// Preprocessing

std::vector<char32_t> case_fold(std::vector<char32_t> cps) {
  for (auto& cp : cps) cp = unicode::simple_case_fold(cp);
  return cps;
}

std::vector<char32_t> normalize_space(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  bool pending = false;
  for (char32_t cp : cps) {
    if (unicode::is_white_space(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(U' ');
    pending = false;
    out.push_back(cp);
  }
  return out;
}

std::vector<char32_t> strip_punctuation(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  for (char32_t cp : cps)
    if (unicode::is_letter(cp) || unicode::is_digit(cp) || unicode::is_white_space(cp))
      out.push_back(cp);
  return out;
}

bool ends_with(const std::vector<char32_t>& word, std::u32string_view suffix) {
  return word.size() >= suffix.size() &&
         std::equal(suffix.begin(), suffix.end(), word.end() - suffix.size());
}

bool sibilant_ending(const std::vector<char32_t>& stem) {
  return ends_with(stem, U"s") || ends_with(stem, U"x") || ends_with(stem, U"z") ||
         ends_with(stem, U"ch") || ends_with(stem, U"sh");
}

void stem_word(std::vector<char32_t>& word) {
  struct Rule {
    std::u32string_view suffix;
    std::u32string_view replacement;
  };
  // Longest first.
  static constexpr Rule kRules[] = {
      {U"ies", U"y"}, {U"ing", U""}, {U"es", U""}, {U"ed", U""}, {U"s", U""}};
  for (const auto& rule : kRules) {
    if (!ends_with(word, rule.suffix)) continue;
    std::vector<char32_t> stem(word.begin(), word.end() - rule.suffix.size());
    if (rule.suffix == U"es" && !sibilant_ending(stem)) continue;
    stem.insert(stem.end(), rule.replacement.begin(), rule.replacement.end());
    if (stem.size() < 3) continue;
    word = std::move(stem);
    return;
  }
}

std::vector<char32_t> stem(const std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  std::vector<char32_t> word;
  auto flush = [&] {
    stem_word(word);
    out.insert(out.end(), word.begin(), word.end());
    word.clear();
  };
  for (char32_t cp : cps) {
    if (unicode::is_white_space(cp)) {
      flush();
      out.push_back(cp);
    } else {
      word.push_back(cp);
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Field pairs

enum class Field { Label, ExactSynonym, Identifier };

const std::vector<std::string>& strings_of(const TermRecord& t, Field f) {
  switch (f) {
    case Field::Label: return t.labels;
    case Field::ExactSynonym: return t.exact_synonyms;
    case Field::Identifier: return t.identifiers;
  }
  return t.labels;
}

Curie field_curie(Field f) {
  switch (f) {
    case Field::Label: return {"rdfs", "label"};
    case Field::ExactSynonym: return {"oio", "hasExactSynonym"};
    case Field::Identifier: return {"dc", "identifier"};
  }
  return {};
}

struct Rule {
  FieldPair pair;
  Field left;
  Field right;
};

std::vector<Rule> rules_for(FieldPair pair) {
  switch (pair) {
    case FieldPair::LabelLabel: return {{pair, Field::Label, Field::Label}};
    case FieldPair::LabelExactSynonym:
      return {{pair, Field::Label, Field::ExactSynonym}, {pair, Field::ExactSynonym, Field::Label}};
    case FieldPair::ExactSynonymExactSynonym:
      return {{pair, Field::ExactSynonym, Field::ExactSynonym}};
    case FieldPair::IdentifierIdentifier: return {{pair, Field::Identifier, Field::Identifier}};
  }
  return {};
}

std::vector<std::vector<std::string>> preprocessed(const TermTable& table, Field f,
                                                   const std::vector<PreprocessingToken>& tokens) {
  std::vector<std::vector<std::string>> out(table.terms.size());
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    for (const auto& s : strings_of(table.terms[i], f)) {
      auto p = preprocess(s, tokens);
      if (!p.empty()) out[i].push_back(std::move(p));
    }
    std::sort(out[i].begin(), out[i].end());
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
  }
  return out;
}

std::string first_or_empty(const std::vector<std::string>& v) { return v.empty() ? "" : v.front(); }

}  // namespace

std::string preprocess(std::string_view text, const std::vector<PreprocessingToken>& tokens) {
  auto cps = unicode::decode(text);
  for (auto token : tokens) {
    switch (token) {
      case PreprocessingToken::CaseFold: cps = case_fold(std::move(cps)); break;
      case PreprocessingToken::WhitespaceNormalize: cps = normalize_space(cps); break;
      case PreprocessingToken::StripPunctuationNonDigit: cps = strip_punctuation(cps); break;
      case PreprocessingToken::Stemming: cps = stem(cps); break;
    }
  }
  return unicode::encode(cps);
}

std::optional<FieldPair> parse_field_pair(std::string_view text) {
  for (auto p : {FieldPair::LabelLabel, FieldPair::LabelExactSynonym,
                 FieldPair::ExactSynonymExactSynonym, FieldPair::IdentifierIdentifier})
    if (to_string(p) == text) return p;
  return std::nullopt;
}

std::string_view to_string(FieldPair pair) {
  switch (pair) {
    case FieldPair::LabelLabel: return "label/label";
    case FieldPair::LabelExactSynonym: return "label/exactSynonym";
    case FieldPair::ExactSynonymExactSynonym: return "exactSynonym/exactSynonym";
    case FieldPair::IdentifierIdentifier: return "identifier/identifier";
  }
  return "";
}

Decimal match_confidence(FieldPair pair, const std::vector<PreprocessingToken>& tokens) {
  const bool stemming =
      std::find(tokens.begin(), tokens.end(), PreprocessingToken::Stemming) != tokens.end();
  // Stemming scales the base value by 0.9. The products are spelled out so
  // the text never depends on float formatting.
  switch (pair) {
    case FieldPair::IdentifierIdentifier: return *Decimal::parse(stemming ? "0.855" : "0.95");
    case FieldPair::LabelLabel: return *Decimal::parse(stemming ? "0.81" : "0.90");
    case FieldPair::LabelExactSynonym: return *Decimal::parse(stemming ? "0.72" : "0.80");
    case FieldPair::ExactSynonymExactSynonym: return *Decimal::parse(stemming ? "0.63" : "0.70");
  }
  return *Decimal::parse("0");
}

LoadedTermTable load_term_table(std::string_view input) {
  if (!unicode::valid_utf8(input)) throw FatalParse("term table is not valid UTF-8");
  if (input.starts_with("\xEF\xBB\xBF")) input.remove_prefix(3);

  std::vector<std::string_view> lines;
  for (auto line : split(input, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  LoadedTermTable out;
  std::size_t i = 0;
  std::vector<std::string_view> header;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    if (lines[i][0] != '#') break;
    header.push_back(lines[i].substr(1));
  }
  const HeaderBlock block = parse_header_block(header, out.notes);
  auto scalar = [&](std::string_view key) -> std::string {
    const HeaderValue* v = block.find(key);
    if (!v) return "";
    if (v->kind != HeaderValue::Kind::Scalar)
      throw FatalParse("term table header '" + std::string(key) + "' must be a scalar");
    return v->scalar;
  };
  out.table.source = scalar("source");
  out.table.source_version = scalar("source_version");
  if (const HeaderValue* v = block.find("curie_map")) {
    if (v->kind == HeaderValue::Kind::Map) {
      for (const auto& [prefix, iri] : v->map) out.table.prefixes.set(prefix, iri);
    } else if (!(v->kind == HeaderValue::Kind::Scalar && v->scalar.empty())) {
      throw FatalParse("term table curie_map must be a map");
    }
  }

  if (i == lines.size()) throw FatalParse("term table has no column header line");
  const auto names = split(lines[i++], '\t');
  std::optional<std::size_t> id_col, label_col, synonym_col, identifier_col;
  for (std::size_t c = 0; c < names.size(); ++c) {
    std::optional<std::size_t>* target = names[c] == "id"               ? &id_col
                                         : names[c] == "label"          ? &label_col
                                         : names[c] == "exact_synonyms" ? &synonym_col
                                         : names[c] == "identifiers"    ? &identifier_col
                                                                        : nullptr;
    if (!target) continue;  // unknown columns are ignored
    if (*target) throw FatalParse("duplicate column '" + std::string(names[c]) + "'");
    *target = c;
  }
  if (!id_col) throw FatalParse("term table has no 'id' column");

  std::set<Curie> seen;
  std::size_t row = 0;
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    ++row;
    const auto cells = split(lines[i], '\t');
    if (cells.size() != names.size())
      throw FatalParse("term table row " + std::to_string(row) + " has " +
                       std::to_string(cells.size()) + " cells, header has " +
                       std::to_string(names.size()));
    auto id = Curie::parse(cells[*id_col]);
    if (!id) throw FatalParse("term table row " + std::to_string(row) + ": malformed id");
    if (!seen.insert(*id).second)
      throw FatalParse("term table row " + std::to_string(row) + ": duplicate id " + id->str());
    TermRecord t;
    t.id = std::move(*id);
    if (label_col) t.labels = split_list(cells[*label_col]);
    if (synonym_col) t.exact_synonyms = split_list(cells[*synonym_col]);
    if (identifier_col) t.identifiers = split_list(cells[*identifier_col]);
    if (t.labels.empty() && t.exact_synonyms.empty() && t.identifiers.empty()) {
      out.notes.push_back({"T001", default_severity("T001"), row, "",
                           "term " + t.id.str() + " has no strings; skipped"});
      continue;
    }
    out.table.terms.push_back(std::move(t));
  }
  return out;
}

MappingSet match(const TermTable& left, const TermTable& right, const MatchConfig& cfg) {
  if (cfg.field_pairs.empty()) throw ConfigError("no field pair enabled");
  if (!is_recommended_predicate(cfg.predicate))
    throw ConfigError("predicate " + cfg.predicate.str() + " is not a recognized mapping predicate");

  MappingSet out;
  out.curie_map = merge_prefix_maps(left.prefixes, right.prefixes);
  out.mapping_tool = cfg.tool_name;
  out.mapping_date = cfg.run_date;

  std::vector<std::string> tokens;
  for (auto t : cfg.preprocessing) tokens.emplace_back(to_string(t));

  for (FieldPair pair : cfg.field_pairs) {
    const Decimal confidence = match_confidence(pair, cfg.preprocessing);
    for (const Rule& rule : rules_for(pair)) {
      const auto lhs = preprocessed(left, rule.left, cfg.preprocessing);
      const auto rhs = preprocessed(right, rule.right, cfg.preprocessing);

      std::unordered_map<std::string_view, std::vector<std::size_t>> index;
      for (std::size_t r = 0; r < rhs.size(); ++r)
        for (const auto& s : rhs[r]) index[s].push_back(r);

      for (std::size_t l = 0; l < lhs.size(); ++l) {
        // Right term -> shared strings, in sorted order since lhs[l] is sorted.
        std::map<std::size_t, std::vector<std::string>> shared;
        for (const auto& s : lhs[l]) {
          auto it = index.find(s);
          if (it == index.end()) continue;
          for (std::size_t r : it->second) shared[r].push_back(s);
        }
        for (auto& [r, strings] : shared) {
          const TermRecord& a = left.terms[l];
          const TermRecord& b = right.terms[r];
          Mapping m;
          m.subject_id = a.id;
          m.predicate_id = cfg.predicate;
          m.object_id = b.id;
          m.match_type = MatchType::Lexical;
          m.subject_label = first_or_empty(a.labels);
          m.object_label = first_or_empty(b.labels);
          m.subject_source = left.source;
          m.subject_source_version = left.source_version;
          m.object_source = right.source;
          m.object_source_version = right.source_version;
          m.confidence = confidence;
          m.subject_match_field = {field_curie(rule.left)};
          m.object_match_field = {field_curie(rule.right)};
          m.match_string = std::move(strings);
          m.preprocessing = tokens;
          m.mapping_tool = cfg.tool_name;
          m.mapping_tool_version = cfg.tool_version;
          m.mapping_date = cfg.run_date;
          out.mappings.push_back(std::move(m));
        }
      }
    }
  }
  sort_canonical(out.mappings);
  return out;
}

}  // namespace sssom
