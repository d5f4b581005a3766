// Copyright 2026 The Sentox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sentox/classifier.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "random.h"
#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {
namespace {

constexpr std::uint64_t kBalanceStream = 1;
constexpr std::uint64_t kSplitStream = 2;
constexpr std::uint64_t kTrainStream = 3;

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

std::uint64_t fnv1a(std::span<const char32_t> gram) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<std::uint8_t>(gram.size()));
  for (char32_t c : gram) {
    for (int shift = 0; shift < 32; shift += 8) {
      mix(static_cast<std::uint8_t>((static_cast<std::uint32_t>(c) >> shift) &
                                    0xff));
    }
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharAlphabet

std::vector<char32_t> folded_code_points(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      len = 0;
    }
    bool valid = len > 0 && i + len <= text.size();
    for (std::size_t k = 1; valid && k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        valid = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (!valid) {
      cp = 0xFFFD;
      len = 1;
    }
    if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
    out.push_back(cp);
    i += len;
  }
  return out;
}

CharAlphabet::CharAlphabet(std::vector<char32_t> chars)
    : chars_(std::move(chars)) {
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (!index_.emplace(chars_[i], i).second) {
      throw UsageError("duplicate character in alphabet");
    }
  }
}

CharAlphabet CharAlphabet::build(std::span<const std::string> texts,
                                 std::size_t max_size) {
  std::map<char32_t, std::uint64_t> counts;
  for (const std::string& t : texts) {
    for (char32_t c : folded_code_points(t)) ++counts[c];
  }
  if (counts.empty()) throw UsageError("cannot build alphabet: empty corpus");
  std::vector<std::pair<char32_t, std::uint64_t>> ranked(counts.begin(),
                                                         counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  std::vector<char32_t> chars;
  for (std::size_t i = 0; i < ranked.size() && i < max_size; ++i) {
    chars.push_back(ranked[i].first);
  }
  return CharAlphabet(std::move(chars));
}

std::optional<std::size_t> CharAlphabet::index(char32_t c) const {
  const auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string CharAlphabet::serialize() const {
  std::ostringstream out;
  out << std::hex;
  for (char32_t c : chars_) out << static_cast<std::uint32_t>(c) << '\n';
  return out.str();
}

CharAlphabet CharAlphabet::deserialize(std::string_view text) {
  std::vector<char32_t> chars;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    std::uint32_t v = 0;
    for (char c : line) {
      int digit = -1;
      if (c >= '0' && c <= '9') digit = c - '0';
      if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      if (digit < 0) throw UsageError("malformed alphabet line");
      v = v * 16 + static_cast<std::uint32_t>(digit);
    }
    chars.push_back(static_cast<char32_t>(v));
  }
  return CharAlphabet(std::move(chars));
}

// ---------------------------------------------------------------------------
// Features

std::vector<double> FeatureVector::dense() const {
  std::vector<double> out(width(), 0.0);
  for_each([&out](std::size_t i, double v) { out[i] = v; });
  return out;
}

FeatureVector extract_features(std::string_view text,
                               const CharAlphabet& alphabet,
                               const SentimentChannel& channel,
                               const FeatureOptions& options) {
  if (options.buckets == 0) throw UsageError("feature buckets must be > 0");
  FeatureVector f;
  f.buckets = options.buckets;

  std::vector<char32_t> stream;
  for (char32_t c : folded_code_points(text)) {
    if (alphabet.index(c)) stream.push_back(c);
  }
  std::map<std::uint32_t, double> grams;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= stream.size(); ++i) {
      const std::span<const char32_t> gram(stream.data() + i, n);
      grams[static_cast<std::uint32_t>(fnv1a(gram) % options.buckets)] += 1.0;
    }
  }
  f.char_ngrams.assign(grams.begin(), grams.end());
  f.length = static_cast<double>(tokenize(text).size());

  if (options.with_sentiment) {
    static const FrequencyTable kEmptyTable;
    const FrequencyTable& freqs =
        channel.freqs != nullptr ? *channel.freqs : kEmptyTable;
    const NegationCueList& cues =
        channel.cues != nullptr ? *channel.cues : NegationCueList::defaults();
    const std::size_t n = std::min(channel.lexicons.size(), kSentimentLexicons);
    for (std::size_t l = 0; l < n; ++l) {
      const SentimentScorer scorer(channel.lexicons[l], channel.config, freqs,
                                   cues);
      const MessageSentiment s = scorer.score(text);
      f.sentiment[3 * l] = s.pos_sum;
      f.sentiment[3 * l + 1] = s.neg_sum;
      f.sentiment[3 * l + 2] = s.score();
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Model

double Model::logit(const FeatureVector& x) const {
  if (x.width() != weights.size()) {
    throw UsageError("feature width " + std::to_string(x.width()) +
                     " does not match model width " +
                     std::to_string(weights.size()));
  }
  double z = bias;
  if (input_scale.empty()) {
    x.for_each([&](std::size_t i, double v) { z += weights[i] * v; });
  } else {
    x.for_each(
        [&](std::size_t i, double v) { z += weights[i] * v * input_scale[i]; });
  }
  return z;
}

double Model::predict_proba(const FeatureVector& x) const {
  return sigmoid(logit(x));
}

double logistic_loss(const Model& model, std::span<const FeatureVector> x,
                     std::span<const int> y, double l2) {
  if (x.size() != y.size() || x.empty()) {
    throw UsageError("logistic_loss: bad sample sizes");
  }
  double loss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = model.logit(x[i]);
    loss += y[i] == 1 ? softplus(-z) : softplus(z);
  }
  loss /= static_cast<double>(x.size());
  double norm = 0.0;
  for (double w : model.weights) norm += w * w;
  return loss + 0.5 * l2 * norm;
}

Gradient loss_gradient(const Model& model, std::span<const FeatureVector> x,
                       std::span<const int> y, double l2) {
  if (x.size() != y.size() || x.empty()) {
    throw UsageError("loss_gradient: bad sample sizes");
  }
  Gradient g;
  g.weights.assign(model.weights.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double residual = (sigmoid(model.logit(x[i])) - y[i]) * inv_n;
    g.bias += residual;
    x[i].for_each([&](std::size_t j, double v) {
      const double scale = model.input_scale.empty() ? 1.0 : model.input_scale[j];
      g.weights[j] += residual * v * scale;
    });
  }
  for (std::size_t j = 0; j < g.weights.size(); ++j) {
    g.weights[j] += l2 * model.weights[j];
  }
  return g;
}

std::vector<double> fit_input_scale(std::span<const FeatureVector> x) {
  if (x.empty()) return {};
  std::vector<double> max_abs(x.front().width(), 0.0);
  for (const FeatureVector& f : x) {
    f.for_each([&](std::size_t i, double v) {
      max_abs[i] = std::max(max_abs[i], std::abs(v));
    });
  }
  for (double& m : max_abs) m = m > 0.0 ? 1.0 / m : 1.0;
  return max_abs;
}

double accuracy(const Model& model, LabeledFeatures data) {
  if (data.x.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    correct += (model.predict(data.x[i]) ? 1 : 0) == data.y[i];
  }
  return static_cast<double>(correct) / static_cast<double>(data.x.size());
}

Model train(LabeledFeatures train_set, const TrainConfig& config,
            std::optional<LabeledFeatures> validation) {
  if (train_set.x.size() != train_set.y.size() || train_set.x.empty()) {
    throw UsageError("train: empty or mismatched training set");
  }
  const bool has_pos = std::count(train_set.y.begin(), train_set.y.end(), 1) > 0;
  const bool has_neg = std::count(train_set.y.begin(), train_set.y.end(), 0) > 0;
  if (!has_pos || !has_neg) {
    throw UsageError("train: labels contain a single class");
  }
  if (config.epochs < 1 || !(config.learning_rate > 0.0) || config.l2 < 0.0) {
    throw UsageError("train: invalid configuration");
  }

  Model model;
  model.weights.assign(train_set.x.front().width(), 0.0);
  model.input_scale = fit_input_scale(train_set.x);
  model.meta.seed = config.seed;
  model.meta.learning_rate = config.learning_rate;
  model.meta.l2 = config.l2;

  auto rng = detail::make_engine(config.seed, kTrainStream);
  std::vector<std::size_t> order(train_set.x.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t batch =
      config.batch_size == 0 ? order.size() : config.batch_size;

  Model best = model;
  double best_val = -1.0;
  int since_best = 0;
  std::vector<FeatureVector> bx;
  std::vector<int> by;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (config.batch_size != 0) detail::shuffle(std::span(order), rng);
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(order.size(), start + batch);
      bx.clear();
      by.clear();
      for (std::size_t k = start; k < end; ++k) {
        bx.push_back(train_set.x[order[k]]);
        by.push_back(train_set.y[order[k]]);
      }
      const Gradient g = loss_gradient(model, bx, by, config.l2);
      for (std::size_t j = 0; j < model.weights.size(); ++j) {
        model.weights[j] -= config.learning_rate * g.weights[j];
      }
      model.bias -= config.learning_rate * g.bias;
    }
    model.meta.epochs_run = epoch;

    if (!validation) continue;
    const double val = accuracy(model, *validation);
    if (val > best_val) {
      best_val = val;
      best = model;
      best.meta.best_epoch = epoch;
      best.meta.validation_accuracy = val;
      since_best = 0;
    } else if (++since_best >= config.patience) {
      break;
    }
  }
  if (!validation) {
    model.meta.best_epoch = model.meta.epochs_run;
    return model;
  }
  best.meta.epochs_run = model.meta.epochs_run;
  return best;
}

nlohmann::ordered_json model_to_json(const Model& model,
                                     const CharAlphabet& alphabet,
                                     const FeatureOptions& options,
                                     std::string_view config_hash) {
  nlohmann::ordered_json j;
  j["format"] = "sentox-model";
  j["version"] = 1;
  j["config_hash"] = std::string(config_hash);
  j["buckets"] = options.buckets;
  j["with_sentiment"] = options.with_sentiment;
  std::vector<std::uint32_t> chars(alphabet.chars().begin(),
                                   alphabet.chars().end());
  j["alphabet"] = chars;
  j["bias"] = model.bias;
  j["weights"] = model.weights;
  j["input_scale"] = model.input_scale;
  j["train_meta"] = {
      {"seed", model.meta.seed},
      {"epochs_run", model.meta.epochs_run},
      {"best_epoch", model.meta.best_epoch},
      {"learning_rate", model.meta.learning_rate},
      {"l2", model.meta.l2},
      {"validation_accuracy", model.meta.validation_accuracy},
  };
  return j;
}

// ---------------------------------------------------------------------------
// Experiment

std::vector<LabeledMessage> balance(std::span<const LabeledMessage> corpus,
                                    std::uint64_t seed) {
  std::vector<std::size_t> toxic;
  std::vector<std::size_t> clean;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus[i].toxic_flag) {
      throw UsageError("balance: message '" + corpus[i].id +
                       "' has no toxic_flag");
    }
    (*corpus[i].toxic_flag ? toxic : clean).push_back(i);
  }
  if (toxic.empty() || clean.empty()) {
    throw UsageError("balance: corpus needs toxic and non-toxic messages");
  }
  std::vector<bool> keep(corpus.size(), false);
  for (std::size_t i : toxic) keep[i] = true;
  if (toxic.size() > clean.size()) {
    warn("balance: more toxic (" + std::to_string(toxic.size()) +
         ") than non-toxic (" + std::to_string(clean.size()) +
         ") messages; keeping all non-toxic");
    for (std::size_t i : clean) keep[i] = true;
  } else {
    auto rng = detail::make_engine(seed, kBalanceStream);
    detail::shuffle(std::span(clean), rng);
    for (std::size_t k = 0; k < toxic.size(); ++k) keep[clean[k]] = true;
  }
  std::vector<LabeledMessage> out;
  out.reserve(2 * toxic.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (keep[i]) out.push_back(corpus[i]);
  }
  return out;
}

Split split(std::span<const LabeledMessage> corpus, std::uint64_t seed) {
  const std::size_t n = corpus.size();
  if (n < 10) throw UsageError("split: need at least 10 messages");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rng = detail::make_engine(seed, kSplitStream);
  detail::shuffle(std::span(order), rng);

  const std::size_t n_train = n * 7 / 10;
  const std::size_t n_val = n * 2 / 10;
  Split s;
  for (std::size_t k = 0; k < n; ++k) {
    const LabeledMessage& m = corpus[order[k]];
    if (k < n_train) {
      s.train.push_back(m);
    } else if (k < n_train + n_val) {
      s.validation.push_back(m);
    } else {
      s.test.push_back(m);
    }
  }
  return s;
}

namespace {

struct FeatureSet {
  std::vector<FeatureVector> x;
  std::vector<int> y;

  LabeledFeatures view() const { return {x, y}; }
};

FeatureSet featurize(std::span<const LabeledMessage> msgs,
                     const CharAlphabet& alphabet,
                     const SentimentChannel& channel,
                     const FeatureOptions& options,
                     const SubstitutionMap* perturbation) {
  FeatureSet out;
  out.x.reserve(msgs.size());
  out.y.reserve(msgs.size());
  for (const LabeledMessage& m : msgs) {
    const std::string text =
        perturbation != nullptr ? perturb(m.text, *perturbation).text : m.text;
    out.x.push_back(extract_features(text, alphabet, channel, options));
    out.y.push_back(m.toxic_flag.value_or(false) ? 1 : 0);
  }
  return out;
}

}  // namespace

double evaluate(const Model& model, std::span<const LabeledMessage> test,
                const CharAlphabet& alphabet, const SentimentChannel& channel,
                const FeatureOptions& options,
                const SubstitutionMap* perturbation) {
  const FeatureSet data =
      featurize(test, alphabet, channel, options, perturbation);
  return accuracy(model, data.view());
}

IdiomSet combined_idioms(std::span<const UnifiedLexicon> lexicons) {
  IdiomSet out;
  for (const UnifiedLexicon& lex : lexicons) {
    out.insert(lex.idioms().begin(), lex.idioms().end());
  }
  return out;
}

double ExperimentReport::mean_accuracy(bool with_sentiment,
                                       bool subverted) const {
  if (runs.empty()) return 0.0;
  double sum = 0.0;
  for (const RunResult& r : runs) sum += r.accuracy[with_sentiment][subverted];
  return sum / static_cast<double>(runs.size());
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["runs_count"] = runs.size();
  j["subversion"] = subversion;
  j["substitution_map_size"] = map_size;
  j["corpus_coverage"] = corpus_coverage;
  nlohmann::ordered_json grid;
  for (bool subverted : {false, true}) {
    if (subverted && !subversion) continue;
    const char* row = subverted ? "subverted" : "clean";
    grid[row]["without_sentiment"] = mean_accuracy(false, subverted);
    grid[row]["with_sentiment"] = mean_accuracy(true, subverted);
  }
  j["grid"] = grid;
  j["runs"] = nlohmann::ordered_json::array();
  for (const RunResult& r : runs) {
    nlohmann::ordered_json run;
    run["seed"] = r.seed;
    run["train_size"] = r.train_size;
    run["validation_size"] = r.validation_size;
    run["test_size"] = r.test_size;
    run["clean"] = {{"without_sentiment", r.accuracy[0][0]},
                    {"with_sentiment", r.accuracy[1][0]}};
    if (subversion) {
      run["subverted"] = {{"without_sentiment", r.accuracy[0][1]},
                          {"with_sentiment", r.accuracy[1][1]}};
      run["test_coverage"] = r.test_coverage;
    }
    j["runs"].push_back(std::move(run));
  }
  return j;
}

std::string ExperimentReport::render_text() const {
  const auto pct = [](double v) { return format_fixed(100.0 * v, 1) + "%"; };
  std::ostringstream out;
  out << "Dataset     | Without sentiment | With sentiment\n";
  out << "------------+-------------------+---------------\n";
  out << "Clean       | " << pct(mean_accuracy(false, false))
      << std::string(18 - pct(mean_accuracy(false, false)).size(), ' ')
      << "| " << pct(mean_accuracy(true, false)) << '\n';
  if (subversion) {
    out << "Subversive  | " << pct(mean_accuracy(false, true))
        << std::string(18 - pct(mean_accuracy(false, true)).size(), ' ')
        << "| " << pct(mean_accuracy(true, true)) << '\n';
  }
  out << "\nruns: " << runs.size() << ", substitution map: " << map_size
      << " entries";
  if (subversion) {
    out << ", toxic coverage: " << pct(corpus_coverage);
  }
  out << '\n';
  return out.str();
}

ExperimentReport run_experiment(std::span<const LabeledMessage> corpus,
                                const SubstitutionMap& map,
                                std::span<const std::uint64_t> seeds,
                                std::span<const UnifiedLexicon> lexicons,
                                const ExperimentConfig& config) {
  if (seeds.empty()) throw UsageError("run_experiment: no seeds");
  if (corpus.empty()) throw UsageError("run_experiment: empty corpus");

  ExperimentReport report;
  report.subversion = config.subversion;
  report.map_size = map.size();
  if (config.subversion) report.corpus_coverage = coverage(corpus, map);

  const IdiomSet idioms = combined_idioms(lexicons);
  for (std::uint64_t seed : seeds) {
    RunResult run;
    run.seed = seed;
    const std::vector<LabeledMessage> balanced = balance(corpus, seed);
    const Split parts = split(balanced, seed);
    run.train_size = parts.train.size();
    run.validation_size = parts.validation.size();
    run.test_size = parts.test.size();
    for (const LabeledMessage& m : parts.train) run.train_ids.push_back(m.id);

    std::vector<std::string> train_texts;
    train_texts.reserve(parts.train.size());
    for (const LabeledMessage& m : parts.train) train_texts.push_back(m.text);
    const CharAlphabet alphabet =
        CharAlphabet::build(train_texts, config.alphabet_size);
    const FrequencyTable freqs = FrequencyTable::from_texts(train_texts, idioms);
    run.alphabet = alphabet.serialize();
    std::ostringstream freq_out;
    freqs.write_tsv(freq_out);
    run.frequency_table = freq_out.str();

    SentimentChannel channel;
    channel.lexicons = lexicons;
    channel.freqs = &freqs;

    if (config.subversion) {
      std::size_t toxic = 0;
      std::size_t altered = 0;
      for (const LabeledMessage& m : parts.test) {
        if (!m.toxic_flag.value_or(false)) continue;
        ++toxic;
        altered += perturb(m.text, map).altered;
      }
      run.test_coverage = toxic == 0 ? 0.0
                                     : static_cast<double>(altered) /
                                           static_cast<double>(toxic);
    }

    for (bool with_sentiment : {false, true}) {
      const FeatureOptions options{config.buckets, with_sentiment};
      const FeatureSet train_set =
          featurize(parts.train, alphabet, channel, options, nullptr);
      const FeatureSet val_set =
          featurize(parts.validation, alphabet, channel, options, nullptr);
      TrainConfig tc = config.train;
      tc.seed = seed;
      const Model model = train(train_set.view(), tc, val_set.view());

      run.accuracy[with_sentiment][0] =
          evaluate(model, parts.test, alphabet, channel, options, nullptr);
      run.accuracy[with_sentiment][1] =
          config.subversion
              ? evaluate(model, parts.test, alphabet, channel, options, &map)
              : run.accuracy[with_sentiment][0];
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace sentox
