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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blognet/records.hpp"

namespace blognet::textprep {

struct NormalizedDocument {
  BlogId blog_id;
  std::vector<std::string> tokens;
};

struct VocabularyOptions {
  std::size_t min_df = 1;
  double max_df_ratio = 1.0;
  // Keep only the K highest-df terms (ties broken lexicographically) after thresholds.
  std::optional<std::size_t> top_k;
};

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> df, std::size_t corpus_size);

  // Sorted, unique.
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  // df()[i] is the number of documents containing terms()[i].
  const std::vector<std::size_t>& df() const noexcept { return df_; }
  std::size_t corpus_size() const noexcept { return corpus_size_; }
  std::size_t size() const noexcept { return terms_.size(); }

  std::optional<std::uint32_t> index_of(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::size_t corpus_size_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Retains terms with min_df <= df <= max_df_ratio * |docs|.
// Throws EmptyCorpusError for an empty corpus, InvalidArgumentError for bad thresholds.
Vocabulary build_vocabulary(const std::vector<NormalizedDocument>& docs,
                            const VocabularyOptions& options);

enum class TfIdfVariant {
  kRawTfLnIdf,     // tf * ln(N / df)
  kLogTfLnIdf,     // (1 + ln tf) * ln(N / df)
  kRawTfSmoothIdf  // tf * (ln((1 + N) / (1 + df)) + 1)
};

struct DocumentVector {
  BlogId blog_id;
  // Sorted by term index; no zero weights.
  std::vector<std::pair<std::uint32_t, double>> weights;
};

DocumentVector vectorize_tfidf(const NormalizedDocument& doc, const Vocabulary& vocab,
                               TfIdfVariant variant = TfIdfVariant::kRawTfLnIdf);

// dot(a, b) / (|a| |b|), clamped to [0, 1]; 0 when either vector is zero.
double cosine_similarity(const DocumentVector& a, const DocumentVector& b);

class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::vector<BlogId> blog_ids);

  const std::vector<BlogId>& blog_ids() const noexcept { return blog_ids_; }
  std::size_t size() const noexcept { return blog_ids_.size(); }
  double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * size() + j]; }

 private:
  std::vector<BlogId> blog_ids_;
  std::vector<double> values_;
};

// Symmetric matrix of cosine_similarity values. Rows are split across `threads`
// workers; every cell is computed independently, so the result does not depend on
// the thread count.
SimilarityMatrix similarity_matrix(const std::vector<DocumentVector>& vectors,
                                   unsigned threads = 1);

}  // namespace blognet::textprep
