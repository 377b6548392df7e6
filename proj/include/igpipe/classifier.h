// Copyright 2026 The igpipe Authors.
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

// Regulative / constitutive statement classifier over TF-IDF weighted word
// 1-3 grams, with a linear decision function.

#ifndef IGPIPE_CLASSIFIER_H_
#define IGPIPE_CLASSIFIER_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "igpipe/conllu.h"
#include "igpipe/ig_types.h"

namespace igpipe {

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lowercased 1-, 2- and 3-grams of |words|: all unigrams in order, then all
// bigrams, then all trigrams.
std::vector<std::string> ExtractNgrams(std::span<const std::string> words);

// Same over the statement's token forms, punctuation (upos PUNCT) excluded.
std::vector<std::string> ExtractNgrams(const Statement &statement);

// Words of raw text: runs of letters, digits and non-ASCII bytes, with
// internal hyphens and apostrophes. Punctuation is dropped.
std::vector<std::string> TokenizeText(std::string_view text);

struct TrainingExample {
  std::vector<std::string> words;
  StatementType type = StatementType::kRegulative;

  static TrainingExample FromStatement(const Statement &statement,
                                       StatementType type);
  static TrainingExample FromText(std::string_view text, StatementType type);
};

struct FeatureSpace {
  int min_n = 1;
  int max_n = 3;
  // Selected n-grams, most discriminative first; index = feature id.
  std::vector<std::string> vocabulary;
  std::vector<double> idf;

  size_t k() const { return vocabulary.size(); }
  // L2-normalized TF-IDF vector over the selected features.
  std::vector<double> Vectorize(std::span<const std::string> ngrams) const;
};

struct Prediction {
  StatementType type = StatementType::kRegulative;
  double score = 0.0;
};

struct ClassifierModel {
  FeatureSpace features;
  std::vector<double> weights;
  double intercept = 0.0;
  double threshold = 0.0;
  uint64_t training_seed = 0;
  double l2 = 0.0;
  int iterations = 0;

  Prediction Predict(const Statement &statement) const;
  Prediction PredictWords(std::span<const std::string> words) const;

  std::string ToJson() const;
  // Throws ParseError / ValidationError on malformed or inconsistent models.
  static ClassifierModel FromJson(std::string_view json);
  static ClassifierModel ReadFile(const std::string &path);
};

struct TrainingOptions {
  size_t k = 70;
  uint64_t seed = 13;
  double l2 = 1e-3;
  double learning_rate = 2.0;
  int max_iterations = 20000;
  // Stop when every gradient component is below this in magnitude.
  double tolerance = 1e-6;
};

// Smoothed inverse document frequency: ln((1 + docs) / (1 + df)) + 1.
double SmoothedIdf(size_t documents, size_t document_frequency);

// Builds TF-IDF over the corpus, keeps the k n-grams with the largest
// absolute difference of per-class mean TF-IDF (ties lexicographic), then fits
// an L2-regularized logistic regression by full-batch gradient descent.
ClassifierModel Fit(std::span<const TrainingExample> corpus,
                    const TrainingOptions &options);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;
};

struct ClassificationReport {
  ClassMetrics regulative;
  ClassMetrics constitutive;
  ClassMetrics macro;
  double accuracy = 0.0;
};

// One-vs-rest precision/recall/F1 per class plus their unweighted mean.
ClassificationReport ScorePredictions(std::span<const StatementType> gold,
                                      std::span<const StatementType> predicted);

ClassificationReport EvaluateClassifier(const ClassifierModel &model,
                                        std::span<const TrainingExample> test);

// Reads training CSV (statement_id, text, label).
std::vector<TrainingExample> ReadTrainingCsv(std::string_view csv);

}  // namespace igpipe

#endif  // IGPIPE_CLASSIFIER_H_
