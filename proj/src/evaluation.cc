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

#include "sentox/evaluation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {
namespace {

constexpr double kMinStd = 1e-9;
constexpr int kOverlapPoints = 20001;
constexpr double kOverlapSpan = 8.0;

double normal_pdf(double x, double mean, double std) {
  constexpr double kInvSqrt2Pi = 0.3989422804014327;
  const double z = (x - mean) / std;
  return kInvSqrt2Pi / std * std::exp(-0.5 * z * z);
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double gaussian_overlap(double mean1, double std1, double mean2, double std2) {
  for (double v : {mean1, std1, mean2, std2}) {
    if (!std::isfinite(v)) {
      throw UsageError("gaussian_overlap: non-finite input");
    }
  }
  if (std1 < 0.0 || std2 < 0.0) {
    throw UsageError("gaussian_overlap: negative standard deviation");
  }
  std1 = std::max(std1, kMinStd);
  std2 = std::max(std2, kMinStd);

  const double spread = kOverlapSpan * std::max(std1, std2);
  const double lo = std::min(mean1, mean2) - spread;
  const double hi = std::max(mean1, mean2) + spread;
  const double h = (hi - lo) / (kOverlapPoints - 1);
  double area = 0.0;
  for (int i = 0; i < kOverlapPoints; ++i) {
    const double x = lo + h * i;
    const double y = std::min(normal_pdf(x, mean1, std1),
                              normal_pdf(x, mean2, std2));
    area += (i == 0 || i == kOverlapPoints - 1) ? 0.5 * y : y;
  }
  return std::clamp(area * h, 0.0, 1.0);
}

SampleStats sample_stats(std::span<const double> values) {
  if (values.size() < 2) {
    throw UsageError("sample statistics need at least two values");
  }
  SampleStats s;
  s.n = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(s.n);
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std_dev = std::sqrt(ss / static_cast<double>(s.n - 1));
  return s;
}

OverlapReport overlap_report(std::span<const LabeledMessage> corpus,
                             const MessageScorer& scorer) {
  std::vector<double> neg;
  std::vector<double> pos;
  for (const LabeledMessage& m : corpus) {
    if (!m.sentiment_label) continue;
    if (is_negative(*m.sentiment_label)) neg.push_back(scorer(m));
    if (is_positive(*m.sentiment_label)) pos.push_back(scorer(m));
  }
  if (neg.size() < 2 || pos.size() < 2) {
    throw UsageError("overlap_report needs at least two negative and two "
                     "positive labeled messages (got " +
                     std::to_string(neg.size()) + " and " +
                     std::to_string(pos.size()) + ")");
  }
  const SampleStats n = sample_stats(neg);
  const SampleStats p = sample_stats(pos);
  OverlapReport r;
  r.mean_neg = n.mean;
  r.std_neg = n.std_dev;
  r.mean_pos = p.mean;
  r.std_pos = p.std_dev;
  r.n_neg = n.n;
  r.n_pos = p.n;
  r.overlap = gaussian_overlap(n.mean, n.std_dev, p.mean, p.std_dev);
  return r;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("pearson: length mismatch");
  if (x.size() < 2) throw UsageError("pearson: need at least two pairs");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateError("correlation undefined: zero variance in " +
                          std::string(sxx == 0.0 ? "first" : "second") +
                          " variable");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("spearman: length mismatch");
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationReport correlation(std::span<const LabeledMessage> corpus,
                              const MessageScorer& scorer,
                              const ToxicityExtractor& toxicity,
                              CorrelationMethod method) {
  std::vector<double> sentiment;
  std::vector<double> tox;
  for (const LabeledMessage& m : corpus) {
    const std::optional<double> t = toxicity ? toxicity(m) : m.toxicity;
    if (!t) continue;
    sentiment.push_back(scorer(m));
    tox.push_back(*t);
  }
  if (sentiment.size() < 2) {
    throw UsageError("correlation needs at least two messages with a "
                     "toxicity value");
  }
  CorrelationReport r;
  r.n = sentiment.size();
  r.method = method;
  r.coefficient = method == CorrelationMethod::kPearson
                      ? pearson(sentiment, tox)
                      : spearman(sentiment, tox);
  return r;
}

std::string SentimentGrid::render_text() const {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"Experiment"};
  header.insert(header.end(), columns.begin(), columns.end());
  table.push_back(header);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> line{rows[r]};
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const GridCell& cell = at(r, c);
      if (!cell.report) {
        line.push_back("n/a");
        continue;
      }
      line.push_back("[" + format_fixed(cell.report->mean_neg, 2) + ", " +
                     format_fixed(cell.report->mean_pos, 2) + "] " +
                     format_fixed(cell.report->overlap, 2));
    }
    table.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      if (c > 0) out << " | ";
      out << table[r][c] << std::string(widths[c] - table[r][c].size(), ' ');
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w;
      out << std::string(total + 3 * (widths.size() - 1), '-') << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json SentimentGrid::to_json() const {
  nlohmann::ordered_json j;
  j["rows"] = rows;
  j["columns"] = columns;
  j["cells"] = nlohmann::ordered_json::array();
  for (const GridCell& cell : cells) {
    nlohmann::ordered_json c;
    c["row"] = cell.row;
    c["column"] = cell.column;
    if (cell.report) {
      c["mean_neg"] = cell.report->mean_neg;
      c["mean_pos"] = cell.report->mean_pos;
      c["std_neg"] = cell.report->std_neg;
      c["std_pos"] = cell.report->std_pos;
      c["overlap"] = cell.report->overlap;
      c["n_neg"] = cell.report->n_neg;
      c["n_pos"] = cell.report->n_pos;
    } else {
      c["error"] = cell.error;
    }
    j["cells"].push_back(std::move(c));
  }
  return j;
}

SentimentGrid sentiment_grid(std::span<const LabeledMessage> corpus,
                             std::span<const ScoringConfig> configs,
                             std::span<const UnifiedLexicon> lexicons,
                             std::span<const CombinationStrategy> strategies,
                             const GridOptions& options) {
  if (configs.empty()) throw UsageError("sentiment_grid: no configurations");
  if (lexicons.empty()) throw UsageError("sentiment_grid: no lexicons");

  static const FrequencyTable kEmptyTable;
  const FrequencyTable& freqs =
      options.freqs != nullptr ? *options.freqs : kEmptyTable;
  const NegationCueList& cues =
      options.cues != nullptr ? *options.cues : NegationCueList::defaults();

  SentimentGrid grid;
  for (const ScoringConfig& c : configs) grid.rows.push_back(c.label());
  if (strategies.empty()) {
    for (const UnifiedLexicon& lex : lexicons) {
      grid.columns.push_back(lex.name());
    }
  } else {
    for (CombinationStrategy s : strategies) {
      grid.columns.emplace_back(display_name(s));
    }
  }

  // Preprocessing depends only on the lexicon's idioms, not on the config.
  std::vector<std::vector<ProcessedMessage>> processed(lexicons.size());
  for (std::size_t l = 0; l < lexicons.size(); ++l) {
    PreprocessOptions opts;
    opts.idioms = &lexicons[l].idioms();
    opts.cues = &cues;
    opts.window = options.window;
    processed[l].reserve(corpus.size());
    for (const LabeledMessage& m : corpus) {
      processed[l].push_back(preprocess(m.text, opts));
    }
  }
  std::map<const LabeledMessage*, std::size_t> position;
  for (std::size_t i = 0; i < corpus.size(); ++i) position[&corpus[i]] = i;

  const auto make_cell = [&](std::string row, std::string column,
                             const MessageScorer& scorer) {
    GridCell cell{std::move(row), std::move(column), std::nullopt, {}};
    try {
      cell.report = overlap_report(corpus, scorer);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    return cell;
  };

  for (const ScoringConfig& config : configs) {
    if (strategies.empty()) {
      for (std::size_t l = 0; l < lexicons.size(); ++l) {
        const MessageScorer scorer = [&, l](const LabeledMessage& m) {
          return score_message(processed[l][position.at(&m)], lexicons[l],
                               config, freqs)
              .score();
        };
        grid.cells.push_back(
            make_cell(config.label(), lexicons[l].name(), scorer));
      }
      continue;
    }
    for (CombinationStrategy strategy : strategies) {
      const MessageScorer scorer = [&](const LabeledMessage& m) {
        std::vector<NamedSentiment> scores;
        scores.reserve(lexicons.size());
        const std::size_t i = position.at(&m);
        for (std::size_t l = 0; l < lexicons.size(); ++l) {
          scores.push_back({lexicons[l].name(),
                            score_message(processed[l][i], lexicons[l], config,
                                          freqs)});
        }
        return combine(scores, strategy);
      };
      grid.cells.push_back(make_cell(
          config.label(), std::string(display_name(strategy)), scorer));
    }
  }
  return grid;
}

}  // namespace sentox
