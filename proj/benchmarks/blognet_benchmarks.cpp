// Copyright 2026 The blognet Authors.
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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "blognet/digraph.hpp"
#include "blognet/graphclean.hpp"
#include "blognet/normalize.hpp"
#include "blognet/ranking.hpp"
#include "blognet/tfidf.hpp"

namespace {

using namespace blognet;

// n nodes, about `degree` random out-links each, plus a ring so most nodes share one SCC.
SimpleDigraph random_graph(std::size_t n, std::size_t degree) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::vector<Arc> arcs;
  arcs.reserve(n * (degree + 1));
  for (NodeId u = 0; u < n; ++u) {
    arcs.push_back({u, static_cast<NodeId>((u + 1) % n), 1.0});
    for (std::size_t k = 0; k < degree; ++k) {
      const NodeId v = node(rng);
      if (v != u) arcs.push_back({u, v, 1.0});
    }
  }
  return SimpleDigraph::from_arcs(n, std::move(arcs));
}

void BM_StronglyConnectedComponents(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(graphclean::strongly_connected_components(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.arc_count()));
}
BENCHMARK(BM_StronglyConnectedComponents)->Arg(10'000)->Arg(50'000)->Unit(benchmark::kMillisecond);

void BM_PageRank(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(ranking::pagerank(g));
}
BENCHMARK(BM_PageRank)->Arg(10'000)->Arg(50'000)->Unit(benchmark::kMillisecond);

void BM_Hits(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(ranking::hits(g));
}
BENCHMARK(BM_Hits)->Arg(10'000)->Arg(50'000)->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(graphclean::clustering_coefficient(g));
}
BENCHMARK(BM_Clustering)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_SimilarityMatrix(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> term(0, 2000);
  std::vector<textprep::NormalizedDocument> docs;
  for (int d = 0; d < state.range(0); ++d) {
    textprep::NormalizedDocument doc{"d" + std::to_string(d), {}};
    for (int i = 0; i < 80; ++i) doc.tokens.push_back("t" + std::to_string(term(rng)));
    docs.push_back(std::move(doc));
  }
  const auto vocab = textprep::build_vocabulary(docs, {});
  std::vector<textprep::DocumentVector> vectors;
  for (const auto& doc : docs) vectors.push_back(textprep::vectorize_tfidf(doc, vocab));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(textprep::similarity_matrix(vectors, threads));
}
BENCHMARK(BM_SimilarityMatrix)->Args({1000, 1})->Args({1000, 4})->Unit(benchmark::kMillisecond);

void BM_Normalize(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < 200; ++i) text += "كتابهاي مدرسة ۱۳۸۹ را آوردم، Hello World ";
  for (auto _ : state) benchmark::DoNotOptimize(textprep::normalize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Normalize);

}  // namespace

BENCHMARK_MAIN();
