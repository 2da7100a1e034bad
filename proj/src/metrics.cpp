#include "serpaudit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "serpaudit/errors.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit::metrics {

const char* level_name(Level l) {
    switch (l) {
        case Level::Doc: return "DOC";
        case Level::Sent: return "SENT";
        case Level::Aspect: return "ASPECT";
    }
    return "DOC";
}

const char* level_table_label(Level l) {
    switch (l) {
        case Level::Doc: return "Document-level";
        case Level::Sent: return "Sentence-level";
        case Level::Aspect: return "Aspect-level";
    }
    return "Document-level";
}

Polarity transform_stance(const Topic& topic, Polarity p) {
    return Polarity(topic.stance_sign * p.value);
}

std::vector<double> minmax_normalize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("minmax_normalize: empty input");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("minmax_normalize: non-finite value");
    }
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    std::vector<double> out(values.size());
    if (lo == hi) {
        std::fill(out.begin(), out.end(), 0.5);  // mid-scale; keeps the slate countable
        return out;
    }
    double range = hi - lo;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = (values[i] - lo) / range;
    }
    return out;
}

double dcg(std::span<const double> gains, GainForm form) {
    double sum = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        double g = gains[i];
        if (!(g >= 0.0) || !std::isfinite(g)) {
            throw std::invalid_argument("dcg: gains must be finite and >= 0");
        }
        if (form == GainForm::Exponential) g = std::exp2(g) - 1.0;
        sum += g / std::log2(static_cast<double>(i) + 2.0);
    }
    return sum;
}

double ndcg_senti(const SlateScores& scores, GainForm form) {
    const auto& gains = scores.normalized;
    if (gains.empty()) throw std::invalid_argument("ndcg_senti: normalized field is empty");
    std::vector<double> ideal(gains.begin(), gains.end());
    std::sort(ideal.begin(), ideal.end(), std::greater<>());
    double denom = dcg(ideal, form);
    if (denom == 0.0) return 0.0;  // no sentiment signal anywhere in the slate
    return dcg(gains, form) / denom;
}

SlateScores score_slate(const QuerySlate& slate, const Topic& topic, Level level,
                        std::span<const double> raw_scores) {
    if (raw_scores.size() != slate.docs.size()) {
        throw std::invalid_argument("score_slate: one raw score per slate document required");
    }
    SlateScores s;
    s.engine = slate.engine;
    s.topic_id = slate.topic_id;
    s.query = slate.query;
    s.level = level;
    s.raw.assign(raw_scores.begin(), raw_scores.end());
    s.transformed.reserve(s.raw.size());
    for (double v : s.raw) {
        s.transformed.push_back(transform_stance(topic, Polarity(v)).value);
    }
    s.normalized = minmax_normalize(s.transformed);
    s.degenerate = std::all_of(s.transformed.begin(), s.transformed.end(),
                               [&](double v) { return v == s.transformed.front(); });
    return s;
}

TopicAggregate aggregate_topic(std::span<const SlateScores> scores, GainForm form) {
    if (scores.empty()) throw EmptyTopic("(none)");
    TopicAggregate agg;
    agg.topic_id = scores.front().topic_id;
    agg.engine = scores.front().engine;
    agg.level = scores.front().level;

    // Deterministic reduction: fold in query order.
    std::vector<const SlateScores*> ordered;
    ordered.reserve(scores.size());
    for (const auto& s : scores) {
        if (s.topic_id != agg.topic_id || s.engine != agg.engine || s.level != agg.level) {
            throw std::invalid_argument("aggregate_topic: mixed topic/engine/level input");
        }
        ordered.push_back(&s);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const SlateScores* a, const SlateScores* b) { return a->query < b->query; });

    double pol_sum = 0.0;
    double ndcg_sum = 0.0;
    for (const SlateScores* s : ordered) {
        pol_sum += stable_mean(s->transformed);
        ndcg_sum += ndcg_senti(*s, form);
        if (s->degenerate) ++agg.degenerate_slates;
    }
    agg.query_count = ordered.size();
    agg.mean_avg_polarity = pol_sum / static_cast<double>(ordered.size());
    agg.mean_ndcg_senti = ndcg_sum / static_cast<double>(ordered.size());
    return agg;
}

std::vector<OverallMean> overall_means(std::span<const TopicAggregate> aggregates) {
    std::map<std::pair<Engine, Level>, std::vector<const TopicAggregate*>> groups;
    for (const auto& a : aggregates) {
        groups[{a.engine, a.level}].push_back(&a);
    }
    std::vector<OverallMean> out;
    out.reserve(groups.size());
    for (auto& [key, rows] : groups) {
        std::sort(rows.begin(), rows.end(), [](const TopicAggregate* a, const TopicAggregate* b) {
            return a->topic_id < b->topic_id;
        });
        OverallMean m;
        m.engine = key.first;
        m.level = key.second;
        double pol = 0.0;
        double ndcg = 0.0;
        for (const TopicAggregate* a : rows) {
            pol += a->mean_avg_polarity;
            ndcg += a->mean_ndcg_senti;
        }
        m.mean_avg_polarity = pol / static_cast<double>(rows.size());
        m.mean_ndcg_senti = ndcg / static_cast<double>(rows.size());
        out.push_back(m);
    }
    return out;
}

ScatterCounts scatter_counts(std::span<const std::pair<double, double>> pairs) {
    constexpr double kDiagonalEps = 1e-9;
    ScatterCounts c;
    for (const auto& [a, b] : pairs) {
        if (std::fabs(b - a) <= kDiagonalEps) {
            ++c.on;
        } else if (b > a) {
            ++c.above;
        } else {
            ++c.below;
        }
    }
    return c;
}

}  // namespace serpaudit::metrics
