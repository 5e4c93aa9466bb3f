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

#ifndef SSSOM_WALKER_HPP_
#define SSSOM_WALKER_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sssom/model.hpp"
#include "sssom/values.hpp"
#include "sssom/vocabulary.hpp"

namespace sssom {

// nullopt = not composable. Exact is the identity on both sides; Related
// composes with nothing else; opposite directions do not compose.
std::optional<PredicateTier> compose(PredicateTier first, PredicateTier second);

struct MappingEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  PredicateTier tier = PredicateTier::Exact;
  std::optional<Decimal> confidence;
  MappingKey origin;

  // Missing confidence counts as 1.0.
  double weight() const noexcept { return confidence ? confidence->value() : 1.0; }
};

// Immutable after build_graph().
class MappingGraph {
 public:
  const std::vector<Curie>& nodes() const noexcept { return nodes_; }
  const std::vector<MappingEdge>& edges() const noexcept { return edges_; }
  // Indices into edges(), ordered by (tier, target, origin).
  const std::vector<std::size_t>& out_edges(std::size_t node) const { return adjacency_[node]; }
  std::optional<std::size_t> index_of(const Curie& node) const;
  std::size_t excluded_count() const noexcept { return excluded_count_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  // True when every edge confidence lies in [0, 1].
  bool weights_bounded() const noexcept { return weights_bounded_; }

 private:
  friend MappingGraph build_graph(const std::vector<MappingSet>& sets);

  std::vector<Curie> nodes_;
  std::vector<MappingEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t excluded_count_ = 0;
  PrefixMap prefixes_;
  bool weights_bounded_ = true;
};

// Symmetric tiers insert both directions; Broad/Narrow rows insert the tier
// forward and its opposite backward. Unknown-tier and negated rows are only
// counted. Parallel edges with the same endpoints and tier keep the highest
// confidence. Prefix maps are merged, first binding wins.
MappingGraph build_graph(const std::vector<MappingSet>& sets);

// `confidence` multiplies the hop weights in ascending order, so a path and
// its reverse always carry the same value.
struct WalkResult {
  Curie target;
  PredicateTier tier = PredicateTier::Exact;
  std::size_t distance = 0;
  double confidence = 1.0;
  std::vector<MappingKey> path;
  // Nodes visited, start first.
  std::vector<Curie> nodes;
  std::vector<PredicateTier> hop_tiers;
  std::vector<std::optional<Decimal>> hop_confidences;
  std::size_t unweighted_hops = 0;
};

// `A -[exactMatch,0.9]-> B -[exactMatch,0.8]-> C`
std::string render_path(const WalkResult& result);

struct WalkQuery {
  std::size_t max_distance = 1;
  std::set<PredicateTier> tier_filter{kWalkableTiers.begin(), kWalkableTiers.end()};
  double min_confidence = 0.0;
};

// Best simple path to every other reachable node. Paths whose folded tier
// falls outside the filter or whose confidence is below the minimum do not
// count. Ranking: highest confidence, then fewest hops, then the smallest
// sequence of origin keys. Sorted by target.
std::vector<WalkResult> neighbors(const MappingGraph& graph, const Curie& start,
                                  const WalkQuery& query);

// Derived mappings (match_type Complex) for every best result of distance
// >= 2, starting from `starts` or from every node when empty.
MappingSet closure(const MappingGraph& graph, const WalkQuery& query, const std::string& tool_name,
                   const std::vector<Curie>& starts = {});

}  // namespace sssom

#endif  // SSSOM_WALKER_HPP_
