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

#include "sssom/transforms.hpp"

#include <algorithm>
#include <map>

#include "sssom/errors.hpp"

namespace sssom {
namespace {

bool higher_confidence(const Mapping& candidate, const Mapping& incumbent) {
  if (!candidate.confidence) return false;
  if (!incumbent.confidence) return true;
  return candidate.confidence->value() > incumbent.confidence->value();
}

template <typename T>
struct Contribution {
  std::size_t input;
  T value;
};

// Collapses equal values; on disagreement moves every contribution to a
// suffixed extension key and returns nullopt.
template <typename T, typename ToHeader>
std::optional<T> reconcile(std::string_view name, const std::vector<Contribution<T>>& values,
                           MergeResult& result, ToHeader to_header) {
  if (values.empty()) return std::nullopt;
  const bool agree = std::all_of(values.begin(), values.end(),
                                 [&](const auto& c) { return c.value == values.front().value; });
  if (agree) return values.front().value;
  for (const auto& c : values)
    result.set.set_extensions[std::string(name) + "_" + std::to_string(c.input + 1)] =
        to_header(c.value);
  result.warnings.push_back({"M001", Severity::Warning, std::nullopt, std::string(name),
                             "inputs disagree on '" + std::string(name) +
                                 "'; values kept as suffixed extensions"});
  return std::nullopt;
}

HeaderValue text_header(const std::string& s) { return HeaderValue::of_scalar(s); }
HeaderValue date_header(const Date& d) { return HeaderValue::of_scalar(d.str()); }
HeaderValue curies_header(const std::vector<Curie>& ids) {
  std::vector<std::string> items;
  for (const auto& c : ids) items.push_back(c.str());
  return HeaderValue::of_list(std::move(items));
}
HeaderValue same_header(const HeaderValue& v) { return v; }

void merge_set_slots(const std::vector<MappingSet>& sets, MergeResult& result) {
  auto text_slot = [&](std::string MappingSet::*field, SetSlot slot) {
    std::vector<Contribution<std::string>> values;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!(sets[i].*field).empty()) values.push_back({i, sets[i].*field});
    if (auto v = reconcile(slot_name(slot), values, result, text_header)) result.set.*field = *v;
  };
  auto date_slot = [&](std::optional<Date> MappingSet::*field, SetSlot slot) {
    std::vector<Contribution<Date>> values;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].*field) values.push_back({i, *(sets[i].*field)});
    if (auto v = reconcile(slot_name(slot), values, result, date_header)) result.set.*field = *v;
  };

  text_slot(&MappingSet::mapping_set_version, SetSlot::MappingSetVersion);
  text_slot(&MappingSet::license, SetSlot::License);
  {
    std::vector<Contribution<std::vector<Curie>>> values;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!sets[i].creator_id.empty()) values.push_back({i, sets[i].creator_id});
    if (auto v = reconcile("creator_id", values, result, curies_header)) result.set.creator_id = *v;
  }
  text_slot(&MappingSet::mapping_provider, SetSlot::MappingProvider);
  text_slot(&MappingSet::mapping_tool, SetSlot::MappingTool);
  date_slot(&MappingSet::mapping_date, SetSlot::MappingDate);
  date_slot(&MappingSet::publication_date, SetSlot::PublicationDate);
  text_slot(&MappingSet::comment, SetSlot::Comment);

  std::map<std::string, std::vector<Contribution<HeaderValue>>> extensions;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const auto& [key, value] : sets[i].set_extensions) extensions[key].push_back({i, value});
  for (const auto& [key, values] : extensions)
    if (auto v = reconcile(key, values, result, same_header)) result.set.set_extensions[key] = *v;
}

}  // namespace

MergeResult merge(const std::vector<MappingSet>& sets, PrefixConflictPolicy policy,
                  std::optional<std::string> mapping_set_id) {
  if (sets.empty()) throw ConfigError("merge needs at least one mapping set");
  MergeResult result;

  PrefixMap prefixes;
  for (const auto& s : sets) {
    if (policy == PrefixConflictPolicy::Error) {
      prefixes = merge_prefix_maps(prefixes, s.curie_map);
      continue;
    }
    for (const auto& [prefix, iri] : s.curie_map.entries()) {
      if (const auto* existing = prefixes.find(prefix)) {
        if (*existing != iri)
          result.warnings.push_back({"M002", Severity::Warning, std::nullopt, "curie_map",
                                     "prefix '" + prefix + "' kept as <" + *existing +
                                         ">, ignoring <" + iri + ">"});
        continue;
      }
      prefixes.set(prefix, iri);
    }
  }
  result.set.curie_map = std::move(prefixes);

  std::map<MappingKey, std::size_t> position;
  for (const auto& s : sets) {
    for (const auto& m : s.mappings) {
      auto [it, inserted] = position.emplace(key_of(m), result.set.mappings.size());
      if (inserted) {
        result.set.mappings.push_back(m);
      } else if (higher_confidence(m, result.set.mappings[it->second])) {
        result.set.mappings[it->second] = m;
      }
    }
  }

  merge_set_slots(sets, result);
  if (mapping_set_id) result.set.mapping_set_id = *mapping_set_id;
  return result;
}

bool FilterCriteria::accepts(const Mapping& m) const {
  if (min_confidence && (!m.confidence || m.confidence->value() < *min_confidence)) return false;
  if (predicates && !predicates->contains(m.predicate_id)) return false;
  if (tiers && !tiers->contains(predicate_tier(m.predicate_id))) return false;
  if (match_types && (!m.match_type || !match_types->contains(*m.match_type))) return false;
  if (subject_prefixes && !subject_prefixes->contains(m.subject_id.prefix)) return false;
  if (object_prefixes && !object_prefixes->contains(m.object_id.prefix)) return false;
  if (exclude_negated && m.predicate_modifier == PredicateModifier::Not) return false;
  return true;
}

namespace {

template <typename T>
std::optional<std::set<T>> intersect(const std::optional<std::set<T>>& a,
                                     const std::optional<std::set<T>>& b) {
  if (!a) return b;
  if (!b) return a;
  std::set<T> out;
  std::set_intersection(a->begin(), a->end(), b->begin(), b->end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

FilterCriteria conjunction(const FilterCriteria& a, const FilterCriteria& b) {
  FilterCriteria c;
  if (a.min_confidence && b.min_confidence)
    c.min_confidence = std::max(*a.min_confidence, *b.min_confidence);
  else
    c.min_confidence = a.min_confidence ? a.min_confidence : b.min_confidence;
  c.predicates = intersect(a.predicates, b.predicates);
  c.tiers = intersect(a.tiers, b.tiers);
  c.match_types = intersect(a.match_types, b.match_types);
  c.subject_prefixes = intersect(a.subject_prefixes, b.subject_prefixes);
  c.object_prefixes = intersect(a.object_prefixes, b.object_prefixes);
  c.exclude_negated = a.exclude_negated || b.exclude_negated;
  return c;
}

FilterResult filter(const MappingSet& set, const FilterCriteria& criteria) {
  FilterResult result;
  result.set = set;
  result.set.mappings.clear();
  for (const auto& m : set.mappings) {
    if (criteria.min_confidence && !m.confidence) ++result.skipped_without_confidence;
    if (criteria.accepts(m)) result.set.mappings.push_back(m);
  }
  return result;
}

DiffReport diff(const MappingSet& left, const MappingSet& right) {
  std::set<MappingKey> lk, rk;
  using Pair = std::pair<Curie, Curie>;
  std::map<Pair, std::set<Curie>> lp, rp;
  for (const auto& m : left.mappings) {
    lk.insert(key_of(m));
    lp[{m.subject_id, m.object_id}].insert(m.predicate_id);
  }
  for (const auto& m : right.mappings) {
    rk.insert(key_of(m));
    rp[{m.subject_id, m.object_id}].insert(m.predicate_id);
  }

  DiffReport report;
  std::set_intersection(lk.begin(), lk.end(), rk.begin(), rk.end(), std::back_inserter(report.common));
  std::set_difference(lk.begin(), lk.end(), rk.begin(), rk.end(), std::back_inserter(report.only_left));
  std::set_difference(rk.begin(), rk.end(), lk.begin(), lk.end(), std::back_inserter(report.only_right));

  for (const auto& [pair, lpreds] : lp) {
    auto it = rp.find(pair);
    if (it == rp.end()) continue;
    const auto& rpreds = it->second;
    std::vector<Curie> left_only, right_only;
    std::set_difference(lpreds.begin(), lpreds.end(), rpreds.begin(), rpreds.end(),
                        std::back_inserter(left_only));
    std::set_difference(rpreds.begin(), rpreds.end(), lpreds.begin(), lpreds.end(),
                        std::back_inserter(right_only));
    for (const auto& a : left_only)
      for (const auto& b : right_only)
        report.predicate_conflicts.push_back({pair.first, pair.second, a, b});
  }
  return report;
}

Mapping invert_mapping(const Mapping& m, const Curie& inverse_predicate) {
  Mapping out = m;
  std::swap(out.subject_id, out.object_id);
  std::swap(out.subject_label, out.object_label);
  std::swap(out.subject_source, out.object_source);
  std::swap(out.subject_source_version, out.object_source_version);
  std::swap(out.subject_match_field, out.object_match_field);
  out.predicate_id = inverse_predicate;
  return out;
}

InvertResult invert(const MappingSet& set) {
  InvertResult result;
  result.set = set;
  result.set.mappings.clear();
  for (const auto& m : set.mappings) {
    if (auto inverse = invert_predicate(m.predicate_id))
      result.set.mappings.push_back(invert_mapping(m, *inverse));
    else
      result.dropped.push_back(key_of(m));
  }
  return result;
}

}  // namespace sssom
