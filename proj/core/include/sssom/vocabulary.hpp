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

#ifndef SSSOM_VOCABULARY_HPP_
#define SSSOM_VOCABULARY_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sssom/curie.hpp"

namespace sssom {

// Composition class of a mapping predicate.
enum class PredicateTier { Exact, Close, Related, Broad, Narrow, Unknown };

enum class MatchType { Lexical, Logical, HumanCurated, SemanticSimilarity, Complex };

enum class PredicateModifier { None, Not };

enum class ParseMode { Strict, Lenient };

// Controlled preprocessing tokens. Anything else is kept verbatim as text.
enum class PreprocessingToken { CaseFold, WhitespaceNormalize, StripPunctuationNonDigit, Stemming };

inline constexpr std::array<MatchType, 5> kAllMatchTypes = {
    MatchType::Lexical, MatchType::Logical, MatchType::HumanCurated,
    MatchType::SemanticSimilarity, MatchType::Complex};

inline constexpr std::array<PredicateTier, 5> kWalkableTiers = {
    PredicateTier::Exact, PredicateTier::Close, PredicateTier::Related,
    PredicateTier::Broad, PredicateTier::Narrow};

// The ten recommended predicates, as rendered CURIEs.
const std::array<std::string_view, 10>& recommended_predicates();
bool is_recommended_predicate(const Curie& predicate);

PredicateTier predicate_tier(const Curie& predicate);

// nullopt means the predicate has no inverse in the recommended vocabulary.
std::optional<Curie> invert_predicate(const Curie& predicate);

struct NormalizedMatchType {
  MatchType type;
  std::vector<std::string> extra_preprocessing;

  friend bool operator==(const NormalizedMatchType&, const NormalizedMatchType&) = default;
};

// Throws UnknownMatchType.
NormalizedMatchType normalize_match_type(std::string_view raw, ParseMode mode);

std::string_view to_string(MatchType type);
std::string_view to_string(PredicateTier tier);
std::string_view to_string(PredicateModifier modifier);
std::string_view to_string(PreprocessingToken token);

std::optional<MatchType> parse_match_type(std::string_view text);
// Accepts the enum spelling ("Exact") or lower case ("exact").
std::optional<PredicateTier> parse_tier(std::string_view text);
std::optional<PreprocessingToken> parse_preprocessing_token(std::string_view text);

// SKOS predicate naming each walkable tier (Exact -> skos:exactMatch, ...).
Curie skos_predicate(PredicateTier tier);

}  // namespace sssom

#endif  // SSSOM_VOCABULARY_HPP_
