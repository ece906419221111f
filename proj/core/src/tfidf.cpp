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

#include "blognet/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "blognet/errors.hpp"

namespace blognet::textprep {

namespace {

double dot(const DocumentVector& a, const DocumentVector& b) {
  double sum = 0.0;
  auto ia = a.weights.begin();
  auto ib = b.weights.begin();
  while (ia != a.weights.end() && ib != b.weights.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double squared_norm(const DocumentVector& v) {
  double sum = 0.0;
  for (const auto& [index, w] : v.weights) sum += w * w;
  return sum;
}

// Exactly 1 when a == b.
double cosine_from_parts(double dot_ab, double na, double nb) {
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return std::clamp(dot_ab / std::sqrt(na * nb), 0.0, 1.0);
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> df,
                       std::size_t corpus_size)
    : terms_(std::move(terms)), df_(std::move(df)), corpus_size_(corpus_size) {
  if (terms_.size() != df_.size()) throw InvalidArgumentError("vocabulary terms/df size mismatch");
  index_.reserve(terms_.size());
  for (std::uint32_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::uint32_t> Vocabulary::index_of(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const std::vector<NormalizedDocument>& docs,
                            const VocabularyOptions& options) {
  if (docs.empty()) throw EmptyCorpusError();
  if (options.min_df < 1) throw InvalidArgumentError("min_df must be >= 1");
  if (!(options.max_df_ratio > 0.0 && options.max_df_ratio <= 1.0))
    throw InvalidArgumentError("max_df_ratio must be in (0, 1]");

  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::vector<std::string> distinct = doc.tokens;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& term : distinct) ++df[std::move(term)];
  }

  const double max_df = options.max_df_ratio * static_cast<double>(docs.size());
  std::vector<std::pair<std::string, std::size_t>> kept;
  for (auto& [term, count] : df) {
    if (count >= options.min_df && static_cast<double>(count) <= max_df)
      kept.emplace_back(term, count);
  }

  if (options.top_k && kept.size() > *options.top_k) {
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    kept.resize(*options.top_k);
    std::sort(kept.begin(), kept.end());
  }

  std::vector<std::string> terms;
  std::vector<std::size_t> counts;
  terms.reserve(kept.size());
  counts.reserve(kept.size());
  for (auto& [term, count] : kept) {
    terms.push_back(std::move(term));
    counts.push_back(count);
  }
  return Vocabulary(std::move(terms), std::move(counts), docs.size());
}

DocumentVector vectorize_tfidf(const NormalizedDocument& doc, const Vocabulary& vocab,
                               TfIdfVariant variant) {
  std::map<std::uint32_t, std::size_t> tf;
  for (const auto& token : doc.tokens) {
    if (const auto index = vocab.index_of(token)) ++tf[*index];
  }

  const auto n = static_cast<double>(vocab.corpus_size());
  DocumentVector vec;
  vec.blog_id = doc.blog_id;
  for (const auto& [index, count] : tf) {
    const auto df = static_cast<double>(vocab.df()[index]);
    const auto raw_tf = static_cast<double>(count);
    double weight = 0.0;
    switch (variant) {
      case TfIdfVariant::kRawTfLnIdf:
        weight = raw_tf * std::log(n / df);
        break;
      case TfIdfVariant::kLogTfLnIdf:
        weight = (1.0 + std::log(raw_tf)) * std::log(n / df);
        break;
      case TfIdfVariant::kRawTfSmoothIdf:
        weight = raw_tf * (std::log((1.0 + n) / (1.0 + df)) + 1.0);
        break;
    }
    if (weight > 0.0) vec.weights.emplace_back(index, weight);
  }
  return vec;
}

double cosine_similarity(const DocumentVector& a, const DocumentVector& b) {
  return cosine_from_parts(dot(a, b), squared_norm(a), squared_norm(b));
}

SimilarityMatrix::SimilarityMatrix(std::vector<BlogId> blog_ids)
    : blog_ids_(std::move(blog_ids)), values_(blog_ids_.size() * blog_ids_.size(), 0.0) {}

SimilarityMatrix similarity_matrix(const std::vector<DocumentVector>& vectors, unsigned threads) {
  std::vector<BlogId> ids;
  ids.reserve(vectors.size());
  for (const auto& v : vectors) ids.push_back(v.blog_id);
  SimilarityMatrix matrix(std::move(ids));

  const std::size_t n = vectors.size();
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = squared_norm(vectors[i]);

  // Row i owns cells (i, j >= i) and their mirrors, so workers never share a cell.
  const auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      const double value = cosine_from_parts(dot(vectors[i], vectors[j]), norms[i], norms[j]);
      matrix.at(i, j) = value;
      matrix.at(j, i) = value;
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
    return matrix;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fill_row(i);
    });
  }
  workers.clear();
  return matrix;
}

}  // namespace blognet::textprep
