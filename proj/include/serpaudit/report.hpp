#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/metrics.hpp"
#include "serpaudit/stats.hpp"

namespace serpaudit::report {

// Everything one audit run emits, assembled in memory first so the manifest
// always covers exactly the files written.
struct ReportBundle {
    std::string run_id;
    std::string config_checksum;
    std::map<std::string, std::string> files;  // relative path -> payload

    // (path, sha256) per file, sorted by path.
    std::vector<std::pair<std::string, std::string>> manifest() const;

    // Writes every file plus manifest.txt under out_dir.
    void write(const std::string& out_dir) const;
};

struct SignificanceRow {
    std::string dataset;  // e.g. "DOCLevel_MeanAvgScore"
    stats::TestReport test;
};

// One scatter point: a query with its two engine scores.
struct ScatterPoint {
    std::string query;
    double a = 0.0;
    double b = 0.0;
};

std::string sanitize_filename(const std::string& name);
const char* level_dir(metrics::Level level);

// Table 2 analogue: per-topic document counts per engine.
void emit_topic_distribution(ReportBundle& bundle, const Corpus& corpus,
                             const EngineNames& names);

// Tables with the published schemas: mean avg polarity, mean NDCG-Senti
// (rows = sentiment levels, columns = engines, 4 decimals) and the
// significance verdict table. Throws IncompleteRun on empty input.
void emit_aggregate_tables(ReportBundle& bundle,
                           std::span<const metrics::TopicAggregate> aggregates,
                           std::span<const metrics::OverallMean> overall,
                           std::span<const SignificanceRow> significance,
                           const EngineNames& names);

// Unit-square scatter with the y = x diagonal and an above/below/on legend;
// raw pairs land in a CSV sidecar.
void emit_topic_scatter(ReportBundle& bundle, const std::string& topic_id,
                        metrics::Level level, std::span<const ScatterPoint> pairs,
                        const metrics::ScatterCounts& counts,
                        const EngineNames& names);

// Grouped bar chart over topics, two bars per group, plus CSV sidecar.
// `use_ndcg` selects which aggregate value becomes the bar height.
void emit_overall_bars(ReportBundle& bundle, metrics::Level level,
                       std::span<const metrics::TopicAggregate> aggregates,
                       bool use_ndcg, const EngineNames& names);

// Normality diagnostics for one sample: histogram and QQ data.
void emit_sample_diagnostics(ReportBundle& bundle, const std::string& dataset,
                             const std::string& engine_tag, const stats::Sample& sample);

// Slates whose transformed polarities were all equal (min-max degenerate).
struct DegenerateSlate {
    std::string topic_id;
    std::string query;
    Engine engine = Engine::A;
    metrics::Level level = metrics::Level::Doc;
};
void emit_degenerate_slates(ReportBundle& bundle,
                            std::span<const DegenerateSlate> rows,
                            const EngineNames& names);

}  // namespace serpaudit::report
