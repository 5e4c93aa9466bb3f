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

#include "sssom/walker.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace sssom {

std::optional<PredicateTier> compose(PredicateTier first, PredicateTier second) {
  using T = PredicateTier;
  if (first == T::Unknown || second == T::Unknown) return std::nullopt;
  if (first == T::Exact) return second;
  if (second == T::Exact) return first;
  if (first == T::Related || second == T::Related) return std::nullopt;
  if (first == second && first != T::Close) return first;
  if (first == T::Close || second == T::Close) return T::Related;
  return std::nullopt;  // Broad/Narrow in opposite directions
}

std::optional<std::size_t> MappingGraph::index_of(const Curie& node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

namespace {

PredicateTier opposite(PredicateTier tier) {
  switch (tier) {
    case PredicateTier::Broad: return PredicateTier::Narrow;
    case PredicateTier::Narrow: return PredicateTier::Broad;
    default: return tier;
  }
}

struct RawEdge {
  Curie from;
  Curie to;
  PredicateTier tier;
  std::optional<Decimal> confidence;
  MappingKey origin;
};

// A present confidence beats an absent one; ties keep the smaller origin.
bool better_edge(const RawEdge& a, const RawEdge& b) {
  const double wa = a.confidence ? a.confidence->value() : -1.0;
  const double wb = b.confidence ? b.confidence->value() : -1.0;
  if (a.confidence.has_value() != b.confidence.has_value()) return a.confidence.has_value();
  if (wa != wb) return wa > wb;
  return a.origin < b.origin;
}

double path_confidence(std::vector<double> weights) {
  std::sort(weights.begin(), weights.end());
  double product = 1.0;
  for (double w : weights) product *= w;
  return product;
}

class Search {
 public:
  Search(const MappingGraph& graph, const WalkQuery& query) : graph_(graph), query_(query) {}

  std::vector<WalkResult> run(std::size_t start) {
    best_.assign(graph_.nodes().size(), Candidate{});
    on_path_.assign(graph_.nodes().size(), false);
    on_path_[start] = true;
    start_ = start;
    extend(start, std::nullopt, 1.0);

    std::vector<WalkResult> out;
    for (std::size_t node = 0; node < best_.size(); ++node)
      if (best_[node].found) out.push_back(materialize(node));
    return out;
  }

 private:
  struct Candidate {
    bool found = false;
    double confidence = 0.0;
    PredicateTier tier = PredicateTier::Exact;
    std::vector<std::size_t> edges;
  };

  void extend(std::size_t node, std::optional<PredicateTier> tier, double running) {
    if (stack_.size() >= query_.max_distance) return;
    for (std::size_t e : graph_.out_edges(node)) {
      const MappingEdge& edge = graph_.edges()[e];
      if (on_path_[edge.to]) continue;
      const auto folded = tier ? compose(*tier, edge.tier) : std::optional(edge.tier);
      if (!folded) continue;  // nothing composes with NotComposable
      const double next = running * edge.weight();
      // A left-to-right product differs from the sorted one only by rounding.
      if (graph_.weights_bounded() && next * (1.0 + 1e-9) < query_.min_confidence) continue;

      stack_.push_back(e);
      on_path_[edge.to] = true;
      consider(edge.to, *folded);
      extend(edge.to, folded, next);
      on_path_[edge.to] = false;
      stack_.pop_back();
    }
  }

  void consider(std::size_t target, PredicateTier tier) {
    if (!query_.tier_filter.contains(tier)) return;
    std::vector<double> weights;
    weights.reserve(stack_.size());
    for (std::size_t e : stack_) weights.push_back(graph_.edges()[e].weight());
    const double confidence = path_confidence(std::move(weights));
    if (confidence < query_.min_confidence) return;

    Candidate& best = best_[target];
    if (best.found) {
      if (confidence != best.confidence) {
        if (confidence < best.confidence) return;
      } else if (stack_.size() != best.edges.size()) {
        if (stack_.size() > best.edges.size()) return;
      } else if (!keys_less(stack_, best.edges)) {
        return;
      }
    }
    best.found = true;
    best.confidence = confidence;
    best.tier = tier;
    best.edges = stack_;
  }

  bool keys_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
    const auto& edges = graph_.edges();
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](std::size_t x, std::size_t y) { return edges[x].origin < edges[y].origin; });
  }

  WalkResult materialize(std::size_t target) const {
    const Candidate& best = best_[target];
    WalkResult r;
    r.target = graph_.nodes()[target];
    r.tier = best.tier;
    r.distance = best.edges.size();
    r.confidence = best.confidence;
    r.nodes.push_back(graph_.nodes()[start_]);
    for (std::size_t e : best.edges) {
      const MappingEdge& edge = graph_.edges()[e];
      r.path.push_back(edge.origin);
      r.nodes.push_back(graph_.nodes()[edge.to]);
      r.hop_tiers.push_back(edge.tier);
      r.hop_confidences.push_back(edge.confidence);
      if (!edge.confidence) ++r.unweighted_hops;
    }
    return r;
  }

  const MappingGraph& graph_;
  const WalkQuery& query_;
  std::size_t start_ = 0;
  std::vector<Candidate> best_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> stack_;
};

}  // namespace

MappingGraph build_graph(const std::vector<MappingSet>& sets) {
  MappingGraph graph;
  std::map<std::tuple<Curie, Curie, PredicateTier>, RawEdge> unique;
  auto add = [&](RawEdge edge) {
    auto key = std::make_tuple(edge.from, edge.to, edge.tier);
    auto [it, inserted] = unique.try_emplace(std::move(key), edge);
    if (!inserted && better_edge(edge, it->second)) it->second = std::move(edge);
  };

  for (const auto& set : sets) {
    for (const auto& [prefix, iri] : set.curie_map.entries())
      if (!graph.prefixes_.contains(prefix)) graph.prefixes_.set(prefix, iri);
    for (const auto& m : set.mappings) {
      const PredicateTier tier = predicate_tier(m.predicate_id);
      if (tier == PredicateTier::Unknown || m.predicate_modifier == PredicateModifier::Not) {
        ++graph.excluded_count_;
        continue;
      }
      const MappingKey origin = key_of(m);
      add({m.subject_id, m.object_id, tier, m.confidence, origin});
      add({m.object_id, m.subject_id, opposite(tier), m.confidence, origin});
    }
  }

  for (const auto& [key, edge] : unique) {
    graph.nodes_.push_back(edge.from);
    graph.nodes_.push_back(edge.to);
  }
  std::sort(graph.nodes_.begin(), graph.nodes_.end());
  graph.nodes_.erase(std::unique(graph.nodes_.begin(), graph.nodes_.end()), graph.nodes_.end());

  graph.adjacency_.resize(graph.nodes_.size());
  for (auto& [key, raw] : unique) {
    MappingEdge edge;
    edge.from = *graph.index_of(raw.from);
    edge.to = *graph.index_of(raw.to);
    edge.tier = raw.tier;
    edge.confidence = raw.confidence;
    edge.origin = raw.origin;
    const double w = edge.weight();
    if (w < 0.0 || w > 1.0) graph.weights_bounded_ = false;
    graph.adjacency_[edge.from].push_back(graph.edges_.size());
    graph.edges_.push_back(std::move(edge));
  }
  for (auto& out : graph.adjacency_) {
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = graph.edges_[a];
      const auto& y = graph.edges_[b];
      return std::tie(x.tier, x.to, x.origin) < std::tie(y.tier, y.to, y.origin);
    });
  }
  return graph;
}

std::string render_path(const WalkResult& result) {
  std::string out = result.nodes.empty() ? "" : result.nodes.front().str();
  for (std::size_t i = 0; i < result.hop_tiers.size(); ++i) {
    out += " -[";
    out += skos_predicate(result.hop_tiers[i]).local_id;
    out += ",";
    out += result.hop_confidences[i] ? result.hop_confidences[i]->text() : "?";
    out += "]-> ";
    out += result.nodes[i + 1].str();
  }
  if (result.unweighted_hops > 0)
    out += " (unweighted hops: " + std::to_string(result.unweighted_hops) + ")";
  return out;
}

std::vector<WalkResult> neighbors(const MappingGraph& graph, const Curie& start,
                                  const WalkQuery& query) {
  const auto index = graph.index_of(start);
  if (!index || query.max_distance == 0) return {};
  return Search(graph, query).run(*index);
}

MappingSet closure(const MappingGraph& graph, const WalkQuery& query, const std::string& tool_name,
                   const std::vector<Curie>& starts) {
  std::vector<std::size_t> sources;
  if (starts.empty()) {
    for (std::size_t i = 0; i < graph.nodes().size(); ++i) sources.push_back(i);
  } else {
    for (const auto& s : starts)
      if (auto i = graph.index_of(s)) sources.push_back(*i);
  }

  std::map<MappingKey, Mapping> derived;
  Search search(graph, query);
  for (std::size_t source : sources) {
    if (query.max_distance < 2) break;
    for (auto& r : search.run(source)) {
      if (r.distance < 2) continue;
      Mapping m;
      m.subject_id = graph.nodes()[source];
      m.predicate_id = skos_predicate(r.tier);
      m.object_id = r.target;
      m.match_type = MatchType::Complex;
      m.confidence = Decimal::from_double(r.confidence);
      m.mapping_tool = tool_name;
      m.comment = render_path(r);
      auto key = key_of(m);
      auto it = derived.find(key);
      if (it == derived.end())
        derived.emplace(std::move(key), std::move(m));
      else if (m.confidence->value() > it->second.confidence->value())
        it->second = std::move(m);
    }
  }

  MappingSet out;
  out.curie_map = graph.prefixes();
  out.mapping_tool = tool_name;
  for (auto& [key, m] : derived) out.mappings.push_back(std::move(m));
  return out;
}

}  // namespace sssom
