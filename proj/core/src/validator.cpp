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

#include "sssom/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sssom {
namespace {

class Findings {
 public:
  explicit Findings(const RuleConfig& cfg) : cfg_(cfg) {}

  void add(std::string code, std::optional<std::size_t> row, std::string_view slot,
           std::string message) {
    Severity severity = default_severity(code);
    if (code == "E005") severity = cfg_.mode == ParseMode::Strict ? Severity::Error : Severity::Warning;
    out_.push_back({std::move(code), severity, row, std::string(slot), std::move(message)});
  }

  std::vector<Diagnostic>& list() { return out_; }

 private:
  const RuleConfig& cfg_;
  std::vector<Diagnostic> out_;
};

bool recommended_agent_scheme(const Curie& c) {
  return c.prefix == "orcid" || c.prefix == "ror" || c.prefix == "wikidata";
}

// E008 when malformed, otherwise E002 when the prefix does not resolve.
void check_curie(const Curie& c, const PrefixMap& pm, const RuleConfig& cfg, Findings& f,
                 std::optional<std::size_t> row, std::string_view slot) {
  if (c.empty()) return;
  if (!c.well_formed()) {
    f.add("E008", row, slot, "'" + c.str() + "' is not a well-formed CURIE");
    return;
  }
  if (!resolve_prefix(c.prefix, pm, cfg.use_builtin_prefixes))
    f.add("E002", row, slot, "prefix '" + c.prefix + "' of '" + c.str() + "' does not resolve");
}

void check_agents(const std::vector<Curie>& ids, const PrefixMap& pm, const RuleConfig& cfg,
                  Findings& f, std::optional<std::size_t> row, std::string_view slot) {
  for (const auto& c : ids) {
    check_curie(c, pm, cfg, f, row, slot);
    if (c.well_formed() && !recommended_agent_scheme(c))
      f.add("E013", row, slot, "'" + c.str() + "' is not an ORCID, ROR or Wikidata identifier");
  }
}

void check_unit_interval(const std::optional<Decimal>& d, Findings& f, std::size_t row,
                         std::string_view slot) {
  if (!d) return;
  const double v = d->value();
  if (!(v >= 0.0 && v <= 1.0))
    f.add("E003", row, slot, std::string(slot) + " " + d->text() + " is outside [0,1]");
}

void check_date(const std::optional<Date>& d, Findings& f, std::optional<std::size_t> row,
                std::string_view slot) {
  if (d && !d->valid()) f.add("E006", row, slot, "'" + d->str() + "' is not a calendar date");
}

void validate_set_level(const MappingSet& set, const RuleConfig& cfg, Findings& f) {
  if (set.license.empty()) f.add("E011", std::nullopt, "license", "mapping set has no license");
  if (set.mapping_set_id.empty())
    f.add("E011", std::nullopt, "mapping_set_id", "mapping set has no mapping_set_id");
  check_agents(set.creator_id, set.curie_map, cfg, f, std::nullopt, "creator_id");
  check_date(set.mapping_date, f, std::nullopt, "mapping_date");
  check_date(set.publication_date, f, std::nullopt, "publication_date");

  std::map<std::string, std::string> first_prefix_for_iri;
  for (const auto& [prefix, iri] : set.curie_map.entries()) {
    if (!plausible_iri_prefix(iri))
      f.add("E016", std::nullopt, "curie_map",
            "IRI prefix <" + iri + "> of '" + prefix + "' is not an http, https or urn IRI");
    auto [it, inserted] = first_prefix_for_iri.emplace(iri, prefix);
    if (!inserted)
      f.add("E017", std::nullopt, "curie_map",
            "prefixes '" + it->second + "' and '" + prefix + "' share <" + iri + ">");
  }
}

void validate_row(const Mapping& m, std::size_t row, const PrefixMap& pm, const RuleConfig& cfg,
                  Findings& f) {
  if (m.subject_id.empty()) f.add("E001", row, "subject_id", "required slot subject_id is missing");
  if (m.predicate_id.empty())
    f.add("E001", row, "predicate_id", "required slot predicate_id is missing");
  if (m.object_id.empty()) f.add("E001", row, "object_id", "required slot object_id is missing");
  if (!m.match_type && m.unknown_match_type.empty())
    f.add("E001", row, "match_type", "required slot match_type is missing");

  check_curie(m.subject_id, pm, cfg, f, row, "subject_id");
  check_curie(m.predicate_id, pm, cfg, f, row, "predicate_id");
  check_curie(m.object_id, pm, cfg, f, row, "object_id");
  for (const auto& c : m.subject_match_field) check_curie(c, pm, cfg, f, row, "subject_match_field");
  for (const auto& c : m.object_match_field) check_curie(c, pm, cfg, f, row, "object_match_field");
  check_agents(m.author_id, pm, cfg, f, row, "author_id");
  check_agents(m.creator_id, pm, cfg, f, row, "creator_id");
  check_agents(m.reviewer_id, pm, cfg, f, row, "reviewer_id");

  check_unit_interval(m.confidence, f, row, "confidence");
  check_unit_interval(m.semantic_similarity_score, f, row, "semantic_similarity_score");

  if (m.predicate_id.well_formed() && !is_recommended_predicate(m.predicate_id))
    f.add("E004", row, "predicate_id",
          "'" + m.predicate_id.str() + "' is not a recommended SKOS/OWL/RDFS predicate");
  if (!m.match_type && !m.unknown_match_type.empty())
    f.add("E005", row, "match_type", "unknown match_type '" + m.unknown_match_type + "'");

  check_date(m.mapping_date, f, row, "mapping_date");
  check_date(m.publication_date, f, row, "publication_date");

  if (m.semantic_similarity_score && m.semantic_similarity_measure.empty())
    f.add("E009", row, "semantic_similarity_measure",
          "semantic_similarity_score given without semantic_similarity_measure");
  for (const auto& token : m.preprocessing)
    if (!parse_preprocessing_token(token))
      f.add("E014", row, "preprocessing", "preprocessing token '" + token + "' is not recognized");
  if (!m.subject_id.empty() && m.subject_id == m.object_id)
    f.add("E015", row, "object_id", "subject_id equals object_id");
}

void apply_overrides(std::vector<Diagnostic>& diags, const RuleConfig& cfg) {
  if (cfg.severity_overrides.empty()) return;
  for (auto& d : diags)
    if (auto it = cfg.severity_overrides.find(d.code); it != cfg.severity_overrides.end())
      d.severity = it->second;
}

}  // namespace

std::vector<Diagnostic> validate(const MappingSet& set, const RuleConfig& cfg) {
  Findings f(cfg);
  validate_set_level(set, cfg, f);

  std::map<MappingKey, std::size_t> first_row;
  for (std::size_t i = 0; i < set.mappings.size(); ++i) {
    const auto& m = set.mappings[i];
    const std::size_t row = i + 1;
    validate_row(m, row, set.curie_map, cfg, f);
    auto [it, inserted] = first_row.emplace(key_of(m), row);
    if (!inserted)
      f.add("E007", row, "", "repeats the assertion '" + it->first.str() + "'");
  }

  auto& out = f.list();
  if (cfg.cardinality) {
    auto extra = check_cardinality(set, *cfg.cardinality);
    out.insert(out.end(), extra.begin(), extra.end());
  }
  apply_overrides(out, cfg);
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_cardinality(const MappingSet& set, CardinalityPolicy policy) {
  std::vector<Diagnostic> out;
  auto scan = [&](bool by_object) {
    std::map<Curie, std::set<Curie>> partners;
    for (const auto& m : set.mappings) {
      if (m.predicate_modifier == PredicateModifier::Not) continue;
      if (predicate_tier(m.predicate_id) != PredicateTier::Exact) continue;
      if (by_object)
        partners[m.object_id].insert(m.subject_id);
      else
        partners[m.subject_id].insert(m.object_id);
    }
    for (const auto& [term, others] : partners) {
      if (others.size() < 2) continue;
      std::string names;
      for (const auto& o : others) names += (names.empty() ? "" : ", ") + o.str();
      out.push_back({"E020", default_severity("E020"), std::nullopt,
                     by_object ? "object_id" : "subject_id",
                     term.str() + " has exact mappings to " + std::to_string(others.size()) +
                         " distinct " + (by_object ? "subjects" : "objects") + ": " + names});
    }
  };
  if (policy == CardinalityPolicy::ObjectUnique || policy == CardinalityPolicy::OneToOne) scan(true);
  if (policy == CardinalityPolicy::SubjectUnique || policy == CardinalityPolicy::OneToOne) scan(false);
  return out;
}

std::vector<Diagnostic> validate_document(const ParsedDocument& doc, const RuleConfig& cfg) {
  std::vector<Diagnostic> out = doc.diagnostics;
  for (auto d : validate(doc.set, cfg)) {
    if (d.row && *d.row >= 1 && *d.row <= doc.source_rows.size()) d.row = doc.source_rows[*d.row - 1];
    out.push_back(std::move(d));
  }
  apply_overrides(out, cfg);
  sort_diagnostics(out);
  return out;
}

}  // namespace sssom
