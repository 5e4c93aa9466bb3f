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

#ifndef SSSOM_MATCHER_HPP_
#define SSSOM_MATCHER_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sssom/curie.hpp"
#include "sssom/diagnostic.hpp"
#include "sssom/model.hpp"
#include "sssom/values.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

struct TermRecord {
  Curie id;
  std::vector<std::string> labels;
  std::vector<std::string> exact_synonyms;
  std::vector<std::string> identifiers;
};

struct TermTable {
  std::string source;
  std::string source_version;
  PrefixMap prefixes;
  std::vector<TermRecord> terms;
};

struct LoadedTermTable {
  TermTable table;
  std::vector<Diagnostic> notes;
};

// TSV with `id`, `label`, `exact_synonyms`, `identifiers` columns
// (pipe-delimited) and `#source:`, `#source_version:`, `#curie_map:` header
// lines. Rows without any string are skipped with a note. Throws FatalParse
// on structural problems or duplicate ids.
LoadedTermTable load_term_table(std::string_view input);

enum class FieldPair { LabelLabel, LabelExactSynonym, ExactSynonymExactSynonym, IdentifierIdentifier };

std::optional<FieldPair> parse_field_pair(std::string_view text);  // "label/exactSynonym", ...
std::string_view to_string(FieldPair pair);

struct MatchConfig {
  std::vector<PreprocessingToken> preprocessing;
  std::set<FieldPair> field_pairs{FieldPair::LabelLabel};
  Curie predicate{"skos", "exactMatch"};
  std::string tool_name = "sssom-match";
  std::string tool_version;
  std::optional<Date> run_date;
};

std::string preprocess(std::string_view text, const std::vector<PreprocessingToken>& tokens);

// Confidence assigned to a field pair under `tokens`, as written to output.
Decimal match_confidence(FieldPair pair, const std::vector<PreprocessingToken>& tokens);

// Equality matching of preprocessed strings. Emits one Lexical row per
// (left term, right term, rule); label/exactSynonym is tried in both
// orientations. Throws ConfigError for an empty field-pair set or a predicate
// outside the recommended vocabulary.
MappingSet match(const TermTable& left, const TermTable& right, const MatchConfig& cfg);

}  // namespace sssom

#endif  // SSSOM_MATCHER_HPP_
