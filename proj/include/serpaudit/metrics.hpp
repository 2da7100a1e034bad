#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/lexicon.hpp"

namespace serpaudit::metrics {

enum class Level { Doc, Sent, Aspect };

const char* level_name(Level l);        // "DOC" / "SENT" / "ASPECT"
const char* level_table_label(Level l); // "Document-level" / ...

enum class GainForm { Linear, Exponential };

// Per-level scores of one slate, in rank order.
struct SlateScores {
    Engine engine = Engine::A;
    std::string topic_id;
    std::string query;
    Level level = Level::Doc;
    std::vector<double> raw;          // polarities as scored
    std::vector<double> transformed;  // raw x stance_sign
    std::vector<double> normalized;   // per-slate min-max, in [0,1]
    bool degenerate = false;          // all transformed values equal
};

struct TopicAggregate {
    std::string topic_id;
    Engine engine = Engine::A;
    Level level = Level::Doc;
    double mean_avg_polarity = 0.0;  // mean over queries of mean transformed polarity
    double mean_ndcg_senti = 0.0;    // mean over queries of NDCG-Senti
    std::size_t query_count = 0;
    std::size_t degenerate_slates = 0;
};

struct OverallMean {
    Engine engine = Engine::A;
    Level level = Level::Doc;
    double mean_avg_polarity = 0.0;
    double mean_ndcg_senti = 0.0;
};

struct ScatterCounts {
    std::size_t above = 0;  // engine B strictly greater
    std::size_t below = 0;
    std::size_t on = 0;     // within 1e-9 of the diagonal

    friend bool operator==(const ScatterCounts&, const ScatterCounts&) = default;
};

// stance_sign x p; maps every topic onto the shared orientation axis.
Polarity transform_stance(const Topic& topic, Polarity p);

// (v - min) / (max - min); an all-equal slate maps to all 0.5.
std::vector<double> minmax_normalize(std::span<const double> values);

// Sum of discounted gains, gain[i] / log2(i + 2) for 0-based i.
// Exponential form uses (2^gain - 1) in the numerator.
double dcg(std::span<const double> gains, GainForm form = GainForm::Linear);

// dcg(normalized) / dcg(normalized sorted descending); 0.0 when the ideal
// is zero (no sentiment signal in the slate).
double ndcg_senti(const SlateScores& scores, GainForm form = GainForm::Linear);

// Scores one slate at one level: raw -> stance transform -> min-max.
// `level_score` supplies the raw polarity per document.
SlateScores score_slate(const QuerySlate& slate, const Topic& topic, Level level,
                        std::span<const double> raw_scores);

TopicAggregate aggregate_topic(std::span<const SlateScores> scores,
                               GainForm form = GainForm::Linear);

std::vector<OverallMean> overall_means(std::span<const TopicAggregate> aggregates);

ScatterCounts scatter_counts(std::span<const std::pair<double, double>> pairs);

}  // namespace serpaudit::metrics
