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

#ifndef SSSOM_VALIDATOR_HPP_
#define SSSOM_VALIDATOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sssom/diagnostic.hpp"
#include "sssom/model.hpp"
#include "sssom/tsv.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

enum class CardinalityPolicy { SubjectUnique, ObjectUnique, OneToOne };

struct RuleConfig {
  // Overrides never drop a finding: overriding to Info still reports it.
  std::map<std::string, Severity> severity_overrides;
  // Cardinality (E020) is opt-in.
  std::optional<CardinalityPolicy> cardinality;
  // Decides E005's default severity: Error when strict, Warning when lenient.
  ParseMode mode = ParseMode::Lenient;
  bool use_builtin_prefixes = true;
};

// Rule catalog:
//   E001 Error    required slot missing or empty
//   E002 Error    CURIE prefix not resolvable through curie_map or built-ins
//   E003 Error    confidence / semantic_similarity_score outside [0,1]
//   E004 Warning  predicate outside the recommended vocabulary
//   E005 Err/Warn unrecognized match_type
//   E006 Error    invalid calendar date
//   E007 Warning  duplicate (subject, predicate, object, modifier)
//   E008 Error    malformed CURIE
//   E009 Warning  semantic_similarity_score without a measure
//   E010 Error    predicate_modifier other than "Not" (raised by the parser)
//   E011 Warning  set lacks license or mapping_set_id
//   E012 Error    unparseable number (raised by the parser)
//   E013 Warning  author/creator/reviewer outside orcid/ror/wikidata
//   E014 Warning  preprocessing token outside the controlled vocabulary
//   E015 Info     subject_id equals object_id
//   E016 Warning  curie_map IRI prefix is not an http/https/urn IRI
//   E017 Warning  two prefixes share one IRI prefix
//   E020 Warning  cardinality policy violated (opt-in)
std::vector<Diagnostic> validate(const MappingSet& set, const RuleConfig& cfg = {});

// E020 for every object (or subject) that non-negated Exact-tier rows
// connect to two or more distinct partners.
std::vector<Diagnostic> check_cardinality(const MappingSet& set, CardinalityPolicy policy);

// Parse diagnostics plus validate(), with row numbers mapped back to file
// rows and overrides applied to both.
std::vector<Diagnostic> validate_document(const ParsedDocument& doc, const RuleConfig& cfg = {});

}  // namespace sssom

#endif  // SSSOM_VALIDATOR_HPP_
