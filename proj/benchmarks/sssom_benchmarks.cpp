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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "generators.hpp"
#include "sssom/matcher.hpp"
#include "sssom/tsv.hpp"
#include "sssom/validator.hpp"
#include "sssom/walker.hpp"

namespace sssom {
namespace {

MappingSet large_set(std::size_t rows) {
  testing::Rng rng(7);
  MappingSet s;
  s.mapping_set_id = "https://example.org/sets/bench";
  s.license = "https://creativecommons.org/publicdomain/zero/1.0/";
  for (const char* p : {"EX", "FOO", "bar.baz", "a-b_c", "X1"})
    s.curie_map.set(p, std::string("http://example.org/") + p + "/");
  for (std::size_t i = 0; i < rows; ++i) s.mappings.push_back(testing::random_mapping(rng));
  sort_canonical(s.mappings);
  return s;
}

void BM_Serialize(benchmark::State& state) {
  const MappingSet s = large_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serialize_canonical(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Serialize)->Arg(1000)->Arg(10000);

void BM_Parse(benchmark::State& state) {
  const std::string text = serialize_canonical(large_set(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_embedded(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse)->Arg(1000)->Arg(10000);

void BM_Validate(benchmark::State& state) {
  const MappingSet s = large_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Validate)->Arg(10000);

void BM_Match(benchmark::State& state) {
  testing::Rng rng(11);
  const auto [left, right] = testing::random_table_pair(rng, static_cast<std::size_t>(state.range(0)), 0.1);
  MatchConfig cfg;
  cfg.preprocessing = {PreprocessingToken::CaseFold, PreprocessingToken::WhitespaceNormalize};
  cfg.field_pairs = {FieldPair::LabelLabel, FieldPair::LabelExactSynonym};
  for (auto _ : state) benchmark::DoNotOptimize(match(left, right, cfg));
}
BENCHMARK(BM_Match)->Arg(200)->Arg(2000);

void BM_Walk(benchmark::State& state) {
  testing::Rng rng(13);
  const auto graph = build_graph({testing::random_graph_set(rng, 50, 100)});
  WalkQuery q;
  q.max_distance = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (const auto& n : graph.nodes()) benchmark::DoNotOptimize(neighbors(graph, n, q));
}
BENCHMARK(BM_Walk)->DenseRange(1, 4);

}  // namespace
}  // namespace sssom

BENCHMARK_MAIN();
