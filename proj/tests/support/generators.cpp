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

#include "generators.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "sssom/tsv.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom::testing {
namespace {

constexpr std::array<std::string_view, 5> kPrefixes = {"EX", "FOO", "bar.baz", "a-b_c", "X1"};

// Multi-byte code points are deliberate.
constexpr std::array<std::string_view, 16> kExotic = {
    "\xC3\xA9", "\xC3\x9F", "\xCE\xA9", "\xE4\xB8\xAD", "\xF0\x9F\x99\x82", "#", "\"", "'",
    "\\",       ":",        "- ",       "{",            "[",                "&", "*",  "%"};

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename C>
const auto& one_of(Rng& rng, const C& c) {
  return *std::next(std::begin(c), static_cast<std::ptrdiff_t>(pick(rng, std::size(c))));
}

std::string random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string w;
  const std::size_t n = min_len + pick(rng, max_len - min_len + 1);
  for (std::size_t i = 0; i < n; ++i) w.push_back(kLetters[pick(rng, kLetters.size())]);
  return w;
}

std::string random_local_id(Rng& rng) {
  static constexpr std::string_view kChars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-:#/";
  std::string id;
  const std::size_t n = 1 + pick(rng, 10);
  for (std::size_t i = 0; i < n; ++i) id.push_back(kChars[pick(rng, kChars.size())]);
  return id;
}

Decimal random_decimal(Rng& rng) {
  static constexpr std::array<std::string_view, 10> kTexts = {
      "0", "1", "0.5", "0.50", "0.500024776", "0.9", "1e-3", "5E-1", "0.25", "0.0001"};
  if (chance(rng, 0.3))
    return Decimal::from_double(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  return *Decimal::parse(one_of(rng, kTexts));
}

Date random_date(Rng& rng) {
  Date d{static_cast<int>(1900 + pick(rng, 200)), static_cast<int>(1 + pick(rng, 12)),
         static_cast<int>(1 + pick(rng, 31))};
  while (!d.valid()) --d.day;
  return d;
}

std::vector<Curie> random_curies(Rng& rng, std::size_t max) {
  std::vector<Curie> out(pick(rng, max + 1));
  for (auto& c : out) c = random_curie(rng);
  return out;
}

std::vector<std::string> random_texts(Rng& rng, std::size_t max) {
  std::vector<std::string> out(pick(rng, max + 1));
  for (auto& s : out) {
    s = random_text(rng, 12, false);
    if (s.empty()) s = "x";
  }
  return out;
}

std::string maybe_text(Rng& rng, double p = 0.4) { return chance(rng, p) ? random_text(rng, 20) : ""; }

HeaderValue random_header_value(Rng& rng) {
  HeaderValue v;
  switch (pick(rng, 3)) {
    case 0: return HeaderValue::of_scalar(random_text(rng, 20));
    case 1:
      v.kind = HeaderValue::Kind::List;
      for (std::size_t i = 0, n = 1 + pick(rng, 3); i < n; ++i) v.list.push_back(random_text(rng, 10));
      return v;
    default: {
      v.kind = HeaderValue::Kind::Map;
      std::vector<std::string> keys;
      for (std::size_t i = 0, n = 1 + pick(rng, 3); i < n; ++i) keys.push_back(random_word(rng, 1, 6));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (auto& k : keys) v.map.emplace_back(std::move(k), random_text(rng, 10));
      return v;
    }
  }
}

}  // namespace

std::string random_text(Rng& rng, std::size_t max_len, bool allow_pipe) {
  std::string s;
  const std::size_t n = pick(rng, max_len + 1);
  while (s.size() < n) {
    const auto roll = pick(rng, 10);
    if (roll < 6)
      s += random_word(rng, 1, 5);
    else if (roll < 8)
      s += ' ';
    else if (roll < 9)
      s += one_of(rng, kExotic);
    else
      s += allow_pipe ? "|" : "/";
  }
  return s;
}

Curie random_curie(Rng& rng) { return {std::string(one_of(rng, kPrefixes)), random_local_id(rng)}; }

Mapping random_mapping(Rng& rng, bool unknown_match_types) {
  Mapping m;
  m.subject_id = random_curie(rng);
  m.object_id = random_curie(rng);
  const auto& predicates = recommended_predicates();
  m.predicate_id = chance(rng, 0.1) ? Curie{"EX", "customRelation"} : *Curie::parse(one_of(rng, predicates));
  if (unknown_match_types && chance(rng, 0.1))
    m.unknown_match_type = "Unk" + std::to_string(pick(rng, 100));
  else
    m.match_type = one_of(rng, kAllMatchTypes);
  if (chance(rng, 0.1)) m.predicate_modifier = PredicateModifier::Not;

  m.subject_label = maybe_text(rng);
  m.object_label = maybe_text(rng);
  m.subject_source = maybe_text(rng, 0.2);
  m.subject_source_version = maybe_text(rng, 0.2);
  m.object_source = maybe_text(rng, 0.2);
  m.object_source_version = maybe_text(rng, 0.2);
  if (chance(rng, 0.6)) m.confidence = random_decimal(rng);
  m.subject_match_field = random_curies(rng, 2);
  m.object_match_field = random_curies(rng, 2);
  m.match_string = random_texts(rng, 2);
  if (chance(rng, 0.3)) {
    static constexpr std::array<std::string_view, 5> kTokens = {
        "CaseFold", "WhitespaceNormalize", "StripPunctuationNonDigit", "Stemming", "Soundex"};
    for (std::size_t i = 0, n = 1 + pick(rng, 2); i < n; ++i)
      m.preprocessing.emplace_back(one_of(rng, kTokens));
  }
  if (chance(rng, 0.2)) m.semantic_similarity_score = random_decimal(rng);
  m.semantic_similarity_measure = maybe_text(rng, 0.2);
  m.mapping_tool = maybe_text(rng, 0.2);
  m.mapping_tool_version = maybe_text(rng, 0.2);
  m.author_id = random_curies(rng, 2);
  m.creator_id = random_curies(rng, 1);
  m.reviewer_id = random_curies(rng, 1);
  if (chance(rng, 0.3)) m.mapping_date = random_date(rng);
  if (chance(rng, 0.2)) m.publication_date = random_date(rng);
  m.mapping_provider = maybe_text(rng, 0.2);
  m.comment = maybe_text(rng, 0.3);
  return m;
}

MappingSet random_mapping_set(Rng& rng, const SetShape& shape) {
  MappingSet set;
  if (shape.set_metadata) {
    set.mapping_set_id = maybe_text(rng, 0.7);
    set.mapping_set_version = maybe_text(rng, 0.3);
    set.license = maybe_text(rng, 0.7);
    set.mapping_provider = maybe_text(rng, 0.3);
    set.mapping_tool = maybe_text(rng, 0.3);
    set.comment = maybe_text(rng, 0.3);
    set.creator_id = random_curies(rng, 2);
    if (chance(rng, 0.3)) set.mapping_date = random_date(rng);
    if (chance(rng, 0.3)) set.publication_date = random_date(rng);
  }
  for (auto p : kPrefixes)
    if (chance(rng, 0.8)) set.curie_map.set(std::string(p), "http://example.org/" + std::string(p) + "/");

  std::vector<std::string> ext_columns;
  if (shape.extensions) {
    for (std::size_t i = 0, n = pick(rng, 3); i < n; ++i)
      ext_columns.push_back("x_" + random_word(rng, 1, 6));
    for (std::size_t i = 0, n = pick(rng, 3); i < n; ++i)
      set.set_extensions["ext_" + random_word(rng, 1, 6)] = random_header_value(rng);
  }

  for (std::size_t i = 0, n = pick(rng, shape.max_rows + 1); i < n; ++i) {
    Mapping m = random_mapping(rng, shape.unknown_match_types);
    for (const auto& col : ext_columns) {
      if (!chance(rng, 0.5)) continue;
      auto value = random_text(rng, 10);
      if (!value.empty()) m.extensions[col] = std::move(value);
    }
    set.mappings.push_back(std::move(m));
  }
  apply_set_defaults(set);
  sort_canonical(set.mappings);
  return set;
}

MappingSet random_graph_set(Rng& rng, std::size_t nodes, std::size_t rows) {
  static const std::array<Curie, 12> kPredicates = {
      Curie{"skos", "exactMatch"},       Curie{"owl", "sameAs"},
      Curie{"owl", "equivalentClass"},   Curie{"skos", "closeMatch"},
      Curie{"skos", "relatedMatch"},     Curie{"skos", "broadMatch"},
      Curie{"skos", "narrowMatch"},      Curie{"rdfs", "subClassOf"},
      Curie{"skos", "exactMatch"},       Curie{"skos", "broadMatch"},
      Curie{"skos", "narrowMatch"},      Curie{"EX", "seeAlso"}};
  static constexpr std::array<std::string_view, 6> kConfidences = {"0.5", "0.8", "0.9", "1",
                                                                   "0.25", "0.75"};
  MappingSet set;
  set.curie_map.set("N", "http://example.org/node/");
  set.curie_map.set("EX", "http://example.org/rel/");
  for (std::size_t i = 0; i < rows; ++i) {
    Mapping m;
    m.subject_id = {"N", std::to_string(1 + pick(rng, nodes))};
    m.object_id = {"N", std::to_string(1 + pick(rng, nodes))};
    m.predicate_id = one_of(rng, kPredicates);
    m.match_type = MatchType::HumanCurated;
    if (chance(rng, 0.05)) m.predicate_modifier = PredicateModifier::Not;
    if (chance(rng, 0.8)) m.confidence = *Decimal::parse(one_of(rng, kConfidences));
    set.mappings.push_back(std::move(m));
  }
  return set;
}

std::pair<TermTable, TermTable> random_table_pair(Rng& rng, std::size_t max_terms,
                                                  double share_rate) {
  // A small vocabulary makes accidental collisions common too.
  static constexpr std::array<std::string_view, 24> kWords = {
      "limb",   "limbs",     "exposure", "exposures", "response", "metformin", "acid",  "fatty",
      "agent",  "Alzheimer", "2",        "3",         "ray",      "UV",        "heart", "bodies",
      "lung",   "singing",   "boxes",    "plated",    "Ω-cell",   "café",      "ß",     "x-ray"};
  auto phrase = [&] {
    std::string s;
    for (std::size_t i = 0, n = 1 + pick(rng, 3); i < n; ++i) {
      if (i) s += pick(rng, 4) == 0 ? "  " : " ";
      s += one_of(rng, kWords);
    }
    return s;
  };
  auto perturb = [&](std::string s) {
    switch (pick(rng, 5)) {
      case 0: std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); }); break;
      case 1: s = " " + s + " "; break;
      case 2: s += "!"; break;
      case 3: s += "s"; break;
      default: break;
    }
    return s;
  };
  auto strings = [&](std::size_t max) {
    std::vector<std::string> out(pick(rng, max + 1));
    for (auto& s : out) s = phrase();
    return out;
  };
  auto table = [&](std::string_view prefix, std::string source) {
    TermTable t;
    t.source = std::move(source);
    t.source_version = "v" + std::to_string(pick(rng, 9));
    t.prefixes.set(std::string(prefix), "http://example.org/" + std::string(prefix) + "_");
    const std::size_t n = 1 + pick(rng, max_terms);
    for (std::size_t i = 0; i < n; ++i) {
      TermRecord r;
      r.id = {std::string(prefix), std::to_string(i + 1)};
      r.labels = strings(2);
      r.exact_synonyms = strings(2);
      r.identifiers = strings(1);
      if (r.labels.empty() && r.exact_synonyms.empty() && r.identifiers.empty())
        r.labels.push_back(phrase());
      t.terms.push_back(std::move(r));
    }
    return t;
  };
  TermTable left = table("L", "LEFT");
  TermTable right = table("R", "RIGHT");

  std::vector<std::string> pool;
  for (const auto& t : left.terms) {
    pool.insert(pool.end(), t.labels.begin(), t.labels.end());
    pool.insert(pool.end(), t.exact_synonyms.begin(), t.exact_synonyms.end());
    pool.insert(pool.end(), t.identifiers.begin(), t.identifiers.end());
  }
  for (auto& t : right.terms) {
    for (auto* field : {&t.labels, &t.exact_synonyms, &t.identifiers})
      for (auto& s : *field)
        if (!pool.empty() && chance(rng, share_rate)) s = perturb(one_of(rng, pool));
  }
  return {std::move(left), std::move(right)};
}

}  // namespace sssom::testing
