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

#include "sssom/vocabulary.hpp"

#include <algorithm>

#include "sssom/errors.hpp"

namespace sssom {

const std::array<std::string_view, 10>& recommended_predicates() {
  static constexpr std::array<std::string_view, 10> kPredicates = {
      "owl:sameAs",        "owl:equivalentClass", "owl:equivalentProperty", "rdfs:subClassOf",
      "rdfs:subPropertyOf", "skos:relatedMatch",   "skos:closeMatch",        "skos:exactMatch",
      "skos:narrowMatch",  "skos:broadMatch"};
  return kPredicates;
}

namespace {

bool is(const Curie& c, std::string_view prefix, std::string_view local) {
  return c.prefix == prefix && c.local_id == local;
}

}  // namespace

bool is_recommended_predicate(const Curie& predicate) {
  return predicate_tier(predicate) != PredicateTier::Unknown;
}

PredicateTier predicate_tier(const Curie& p) {
  if (p.prefix == "owl") {
    if (p.local_id == "sameAs" || p.local_id == "equivalentClass" ||
        p.local_id == "equivalentProperty")
      return PredicateTier::Exact;
  } else if (p.prefix == "skos") {
    if (p.local_id == "exactMatch") return PredicateTier::Exact;
    if (p.local_id == "closeMatch") return PredicateTier::Close;
    if (p.local_id == "relatedMatch") return PredicateTier::Related;
    if (p.local_id == "broadMatch") return PredicateTier::Broad;
    if (p.local_id == "narrowMatch") return PredicateTier::Narrow;
  } else if (p.prefix == "rdfs") {
    // The subject is the narrower concept, as with skos:broadMatch.
    if (p.local_id == "subClassOf" || p.local_id == "subPropertyOf") return PredicateTier::Broad;
  }
  return PredicateTier::Unknown;
}

std::optional<Curie> invert_predicate(const Curie& p) {
  if (is(p, "skos", "broadMatch")) return Curie{"skos", "narrowMatch"};
  if (is(p, "skos", "narrowMatch")) return Curie{"skos", "broadMatch"};
  switch (predicate_tier(p)) {
    case PredicateTier::Exact:
    case PredicateTier::Close:
    case PredicateTier::Related:
      return p;
    default:
      return std::nullopt;
  }
}

NormalizedMatchType normalize_match_type(std::string_view raw, ParseMode mode) {
  if (auto t = parse_match_type(raw)) return {*t, {}};
  if (mode == ParseMode::Lenient && raw == "LexicalStemming")
    return {MatchType::Lexical, {std::string(to_string(PreprocessingToken::Stemming))}};
  throw UnknownMatchType(std::string(raw));
}

std::string_view to_string(MatchType type) {
  switch (type) {
    case MatchType::Lexical: return "Lexical";
    case MatchType::Logical: return "Logical";
    case MatchType::HumanCurated: return "HumanCurated";
    case MatchType::SemanticSimilarity: return "SemanticSimilarity";
    case MatchType::Complex: return "Complex";
  }
  return "";
}

std::string_view to_string(PredicateTier tier) {
  switch (tier) {
    case PredicateTier::Exact: return "Exact";
    case PredicateTier::Close: return "Close";
    case PredicateTier::Related: return "Related";
    case PredicateTier::Broad: return "Broad";
    case PredicateTier::Narrow: return "Narrow";
    case PredicateTier::Unknown: return "Unknown";
  }
  return "";
}

std::string_view to_string(PredicateModifier modifier) {
  return modifier == PredicateModifier::Not ? "Not" : "";
}

std::string_view to_string(PreprocessingToken token) {
  switch (token) {
    case PreprocessingToken::CaseFold: return "CaseFold";
    case PreprocessingToken::WhitespaceNormalize: return "WhitespaceNormalize";
    case PreprocessingToken::StripPunctuationNonDigit: return "StripPunctuationNonDigit";
    case PreprocessingToken::Stemming: return "Stemming";
  }
  return "";
}

std::optional<MatchType> parse_match_type(std::string_view text) {
  for (auto t : kAllMatchTypes)
    if (to_string(t) == text) return t;
  return std::nullopt;
}

std::optional<PredicateTier> parse_tier(std::string_view text) {
  for (auto t : kWalkableTiers) {
    const auto name = to_string(t);
    if (name == text) return t;
    if (text.size() == name.size() &&
        std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
          return (a | 0x20) == (b | 0x20);
        }))
      return t;
  }
  return std::nullopt;
}

std::optional<PreprocessingToken> parse_preprocessing_token(std::string_view text) {
  for (auto t : {PreprocessingToken::CaseFold, PreprocessingToken::WhitespaceNormalize,
                 PreprocessingToken::StripPunctuationNonDigit, PreprocessingToken::Stemming})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

Curie skos_predicate(PredicateTier tier) {
  switch (tier) {
    case PredicateTier::Exact: return {"skos", "exactMatch"};
    case PredicateTier::Close: return {"skos", "closeMatch"};
    case PredicateTier::Related: return {"skos", "relatedMatch"};
    case PredicateTier::Broad: return {"skos", "broadMatch"};
    case PredicateTier::Narrow: return {"skos", "narrowMatch"};
    case PredicateTier::Unknown: break;
  }
  return {};
}

}  // namespace sssom
