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

#ifndef SSSOM_TESTS_SUPPORT_GENERATORS_HPP_
#define SSSOM_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sssom/matcher.hpp"
#include "sssom/model.hpp"

namespace sssom::testing {

using Rng = std::mt19937_64;

struct SetShape {
  std::size_t max_rows = 12;
  bool unknown_match_types = true;
  bool extensions = true;
  bool set_metadata = true;
};

// A set that serializes without error, with set defaults already applied
// and rows in canonical order, so parse(serialize(s)) == s is expected.
MappingSet random_mapping_set(Rng& rng, const SetShape& shape = {});

// Rows over nodes N:1..N:nodes with random predicates (some outside the
// walkable vocabulary), confidences drawn from a small pool so that ties are
// common, and occasional negation.
MappingSet random_graph_set(Rng& rng, std::size_t nodes, std::size_t rows);

// Two tables where roughly `share_rate` of the right-hand strings are
// perturbed copies of left-hand strings.
std::pair<TermTable, TermTable> random_table_pair(Rng& rng, std::size_t max_terms,
                                                  double share_rate);

// Pieces reused by the algebraic suites.
Mapping random_mapping(Rng& rng, bool unknown_match_types = false);
Curie random_curie(Rng& rng);
std::string random_text(Rng& rng, std::size_t max_len, bool allow_pipe = true);

}  // namespace sssom::testing

#endif  // SSSOM_TESTS_SUPPORT_GENERATORS_HPP_
