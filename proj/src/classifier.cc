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

#include "igpipe/classifier.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "igpipe/csv.h"
#include "igpipe/lexicon.h"
#include "json.hpp"

namespace igpipe {
namespace {

using json = nlohmann::json;

constexpr std::string_view kModelFormat = "igpipe-statement-classifier";

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double Label(StatementType type) {
  return type == StatementType::kRegulative ? 1.0 : -1.0;
}

ClassMetrics OneVsRest(std::span<const StatementType> gold,
                       std::span<const StatementType> predicted,
                       StatementType positive) {
  size_t tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    bool g = gold[i] == positive;
    bool p = predicted[i] == positive;
    if (g && p) ++tp;
    if (!g && p) ++fp;
    if (g && !p) ++fn;
  }
  ClassMetrics m;
  m.support = tp + fn;
  m.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
  m.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
  m.f1 = m.precision + m.recall == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

}  // namespace

std::vector<std::string> ExtractNgrams(std::span<const std::string> words) {
  std::vector<std::string> lower;
  lower.reserve(words.size());
  for (const std::string &w : words) lower.push_back(Lowercase(w));

  std::vector<std::string> out;
  for (size_t n = 1; n <= 3; ++n) {
    for (size_t i = 0; i + n <= lower.size(); ++i) {
      std::string gram = lower[i];
      for (size_t j = 1; j < n; ++j) {
        gram += ' ';
        gram += lower[i + j];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

std::vector<std::string> ExtractNgrams(const Statement &statement) {
  return ExtractNgrams(
      TrainingExample::FromStatement(statement, StatementType::kRegulative)
          .words);
}

std::vector<std::string> TokenizeText(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (IsWordByte(c)) {
      cur += static_cast<char>(c);
    } else if ((c == '-' || c == '\'') && !cur.empty() && i + 1 < text.size() &&
               IsWordByte(static_cast<unsigned char>(text[i + 1]))) {
      cur += static_cast<char>(c);
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

TrainingExample TrainingExample::FromStatement(const Statement &statement,
                                               StatementType type) {
  TrainingExample ex;
  ex.type = type;
  for (const Token &t : statement.tokens()) {
    if (!t.IsPunct()) ex.words.push_back(t.form);
  }
  return ex;
}

TrainingExample TrainingExample::FromText(std::string_view text,
                                          StatementType type) {
  return {TokenizeText(text), type};
}

std::vector<double> FeatureSpace::Vectorize(
    std::span<const std::string> ngrams) const {
  std::vector<double> x(k(), 0.0);
  for (const std::string &g : ngrams) {
    auto it = std::find(vocabulary.begin(), vocabulary.end(), g);
    if (it != vocabulary.end()) x[it - vocabulary.begin()] += 1.0;
  }
  double norm = 0.0;
  for (size_t f = 0; f < x.size(); ++f) {
    x[f] *= idf[f];
    norm += x[f] * x[f];
  }
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double &v : x) v /= norm;
  }
  return x;
}

Prediction ClassifierModel::PredictWords(
    std::span<const std::string> words) const {
  std::vector<double> x = features.Vectorize(ExtractNgrams(words));
  double score = intercept;
  for (size_t f = 0; f < x.size(); ++f) score += weights[f] * x[f];
  return {score > threshold ? StatementType::kRegulative
                            : StatementType::kConstitutive,
          score};
}

Prediction ClassifierModel::Predict(const Statement &statement) const {
  return PredictWords(
      TrainingExample::FromStatement(statement, StatementType::kRegulative)
          .words);
}

std::string ClassifierModel::ToJson() const {
  json j;
  j["format"] = kModelFormat;
  j["version"] = 1;
  j["ngram_range"] = {features.min_n, features.max_n};
  j["k"] = features.k();
  j["vocabulary"] = features.vocabulary;
  j["idf"] = features.idf;
  j["weights"] = weights;
  j["intercept"] = intercept;
  j["threshold"] = threshold;
  j["training_seed"] = training_seed;
  j["l2"] = l2;
  j["iterations"] = iterations;
  return j.dump(2) + "\n";
}

ClassifierModel ClassifierModel::FromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(1, std::string("model JSON: ") + e.what());
  }
  if (j.value("format", "") != kModelFormat) {
    throw ValidationError("not a statement classifier model");
  }
  ClassifierModel m;
  try {
    m.features.min_n = j.at("ngram_range").at(0).get<int>();
    m.features.max_n = j.at("ngram_range").at(1).get<int>();
    m.features.vocabulary =
        j.at("vocabulary").get<std::vector<std::string>>();
    m.features.idf = j.at("idf").get<std::vector<double>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.intercept = j.at("intercept").get<double>();
    m.threshold = j.value("threshold", 0.0);
    m.training_seed = j.value("training_seed", uint64_t{0});
    m.l2 = j.value("l2", 0.0);
    m.iterations = j.value("iterations", 0);
  } catch (const json::exception &e) {
    throw ValidationError(std::string("model JSON: ") + e.what());
  }
  const size_t k = m.features.k();
  if (m.features.idf.size() != k || m.weights.size() != k ||
      j.value("k", k) != k) {
    throw ValidationError("model JSON: vocabulary, idf and weights differ in "
                          "length");
  }
  for (double v : m.features.idf) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError("model JSON: idf values must be finite and > 0");
    }
  }
  return m;
}

ClassifierModel ClassifierModel::ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

double SmoothedIdf(size_t documents, size_t document_frequency) {
  return std::log((1.0 + static_cast<double>(documents)) /
                  (1.0 + static_cast<double>(document_frequency))) +
         1.0;
}

ClassifierModel Fit(std::span<const TrainingExample> corpus,
                    const TrainingOptions &options) {
  size_t n_reg = 0;
  for (const TrainingExample &ex : corpus) {
    if (ex.type == StatementType::kRegulative) ++n_reg;
  }
  const size_t n_con = corpus.size() - n_reg;
  if (n_reg == 0 || n_con == 0) {
    throw TrainingError("training corpus must contain both regulative and "
                        "constitutive statements");
  }
  if (options.k == 0) throw TrainingError("k must be positive");

  // Term counts per document and document frequencies over the full
  // vocabulary.
  std::vector<std::map<std::string, double>> counts(corpus.size());
  std::map<std::string, size_t> df;
  for (size_t d = 0; d < corpus.size(); ++d) {
    for (std::string &g : ExtractNgrams(corpus[d].words)) {
      counts[d][std::move(g)] += 1.0;
    }
    for (const auto &[g, c] : counts[d]) ++df[g];
  }
  if (options.k > df.size()) {
    throw TrainingError("k = " + std::to_string(options.k) + " exceeds the " +
                        std::to_string(df.size()) + " available features");
  }
  std::map<std::string, double> idf;
  for (const auto &[g, f] : df) idf[g] = SmoothedIdf(corpus.size(), f);

  // Per-class mean of L2-normalized TF-IDF, the feature selection score.
  std::map<std::string, double> mean_reg, mean_con;
  for (size_t d = 0; d < corpus.size(); ++d) {
    double norm = 0.0;
    for (const auto &[g, c] : counts[d]) norm += (c * idf[g]) * (c * idf[g]);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    auto &target =
        corpus[d].type == StatementType::kRegulative ? mean_reg : mean_con;
    for (const auto &[g, c] : counts[d]) target[g] += c * idf[g] / norm;
  }
  std::vector<std::pair<double, std::string>> ranked;
  ranked.reserve(df.size());
  for (const auto &[g, f] : df) {
    double score = std::abs(mean_reg[g] / static_cast<double>(n_reg) -
                            mean_con[g] / static_cast<double>(n_con));
    // Scores equal to 12 decimals count as ties, so the lexicographic
    // tie-break does not hinge on summation order.
    ranked.emplace_back(std::round(score * 1e12) / 1e12, g);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });

  ClassifierModel model;
  model.training_seed = options.seed;
  model.l2 = options.l2;
  for (size_t f = 0; f < options.k; ++f) {
    model.features.vocabulary.push_back(ranked[f].second);
    model.features.idf.push_back(idf[ranked[f].second]);
  }

  const size_t k = options.k;
  const size_t n = corpus.size();
  std::vector<std::vector<double>> x(n);
  std::vector<double> y(n);
  for (size_t d = 0; d < n; ++d) {
    x[d] = model.features.Vectorize(ExtractNgrams(corpus[d].words));
    y[d] = Label(corpus[d].type);
  }

  // Small seeded initial weights; the objective is strictly convex, so the
  // seed only moves the iterate within the stopping tolerance.
  std::mt19937_64 rng(options.seed);
  std::vector<double> w(k);
  for (double &v : w) {
    v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.02;
  }
  double b = 0.0;

  std::vector<double> grad(k);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (size_t d = 0; d < n; ++d) {
      double z = b;
      for (size_t f = 0; f < k; ++f) z += w[f] * x[d][f];
      double coef = -y[d] * Sigmoid(-y[d] * z) / static_cast<double>(n);
      for (size_t f = 0; f < k; ++f) grad[f] += coef * x[d][f];
      grad_b += coef;
    }
    double max_grad = std::abs(grad_b);
    for (size_t f = 0; f < k; ++f) {
      grad[f] += options.l2 * w[f];
      max_grad = std::max(max_grad, std::abs(grad[f]));
    }
    if (max_grad < options.tolerance) break;
    for (size_t f = 0; f < k; ++f) w[f] -= options.learning_rate * grad[f];
    b -= options.learning_rate * grad_b;
  }
  model.weights = std::move(w);
  model.intercept = b;
  model.iterations = iter;
  return model;
}

ClassificationReport ScorePredictions(std::span<const StatementType> gold,
                                      std::span<const StatementType> predicted) {
  if (gold.size() != predicted.size()) {
    throw std::invalid_argument("gold and predicted differ in length");
  }
  ClassificationReport r;
  r.regulative = OneVsRest(gold, predicted, StatementType::kRegulative);
  r.constitutive = OneVsRest(gold, predicted, StatementType::kConstitutive);
  r.macro.precision = (r.regulative.precision + r.constitutive.precision) / 2;
  r.macro.recall = (r.regulative.recall + r.constitutive.recall) / 2;
  r.macro.f1 = (r.regulative.f1 + r.constitutive.f1) / 2;
  r.macro.support = gold.size();
  size_t correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) correct += gold[i] == predicted[i];
  r.accuracy = gold.empty() ? 0.0 : static_cast<double>(correct) / gold.size();
  return r;
}

ClassificationReport EvaluateClassifier(const ClassifierModel &model,
                                        std::span<const TrainingExample> test) {
  std::vector<StatementType> gold, predicted;
  for (const TrainingExample &ex : test) {
    gold.push_back(ex.type);
    predicted.push_back(model.PredictWords(ex.words).type);
  }
  return ScorePredictions(gold, predicted);
}

std::vector<TrainingExample> ReadTrainingCsv(std::string_view csv) {
  std::vector<TrainingExample> out;
  std::vector<CsvRow> rows =
      ReadCsvColumns(csv, {"statement_id", "text", "label"});
  for (size_t r = 0; r < rows.size(); ++r) {
    std::optional<StatementType> type = ParseStatementType(Lowercase(rows[r][2]));
    if (!type) {
      throw ParseError(static_cast<int>(r) + 2,
                       "label must be regulative or constitutive, got '" +
                           rows[r][2] + "'");
    }
    out.push_back(TrainingExample::FromText(rows[r][1], *type));
  }
  return out;
}

}  // namespace igpipe
