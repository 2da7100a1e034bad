#include "serpaudit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include "serpaudit/errors.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit::report {

namespace {

namespace fs = std::filesystem;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

// Scatter geometry: 800x800 viewBox, 80px margins, unit square inside.
constexpr double kScatterSize = 800.0;
constexpr double kScatterMargin = 80.0;
constexpr double kScatterSpan = kScatterSize - 2.0 * kScatterMargin;

double sx(double u) { return kScatterMargin + u * kScatterSpan; }
double sy(double u) { return kScatterSize - kScatterMargin - u * kScatterSpan; }

std::string num2(double v) { return format_fixed(v, 2); }

void svg_header(std::ostringstream& svg, double w, double h) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num2(w) << " "
        << num2(h) << "\">\n";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string display_topic(const std::string& topic_id) {
    // "gay_marriage" -> "Gay Marriage" for figure titles.
    std::string out;
    bool cap = true;
    for (char c : topic_id) {
        if (c == '_' || c == '-' || c == ' ') {
            out.push_back(' ');
            cap = true;
        } else if (cap) {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            cap = false;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string sanitize_filename(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? std::string("_") : out;
}

const char* level_dir(metrics::Level level) {
    switch (level) {
        case metrics::Level::Doc: return "doc";
        case metrics::Level::Sent: return "sent";
        case metrics::Level::Aspect: return "aspect";
    }
    return "doc";
}

std::vector<std::pair<std::string, std::string>> ReportBundle::manifest() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(files.size());
    for (const auto& [name, content] : files) {
        out.emplace_back(name, sha256_hex(content));
    }
    return out;  // map order is already sorted by path
}

void ReportBundle::write(const std::string& out_dir) const {
    fs::path root(out_dir);
    for (const auto& [name, content] : files) {
        fs::path target = root / name;
        fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        if (!out) throw InputError("cannot write output file: " + target.string());
        out << content;
    }
    std::ofstream mf(root / "manifest.txt", std::ios::binary);
    if (!mf) throw InputError("cannot write manifest under: " + out_dir);
    for (const auto& [name, digest] : manifest()) {
        mf << name << '\t' << digest << '\n';
    }
}

void emit_topic_distribution(ReportBundle& bundle, const Corpus& corpus,
                             const EngineNames& names) {
    std::ostringstream csv;
    csv << "Topic," << csv_field(names.a) << "," << csv_field(names.b) << "\n";
    for (const auto& row : topic_distribution(corpus)) {
        csv << csv_field(row.topic_id) << "," << row.docs_a << "," << row.docs_b << "\n";
    }
    bundle.files["tables/topic_distribution.csv"] = csv.str();
}

void emit_aggregate_tables(ReportBundle& bundle,
                           std::span<const metrics::TopicAggregate> aggregates,
                           std::span<const metrics::OverallMean> overall,
                           std::span<const SignificanceRow> significance,
                           const EngineNames& names) {
    if (aggregates.empty() || overall.empty()) {
        throw IncompleteRun("aggregate tables need at least one scored topic");
    }

    auto overall_value = [&](Engine e, metrics::Level l, bool ndcg) -> double {
        for (const auto& m : overall) {
            if (m.engine == e && m.level == l) {
                return ndcg ? m.mean_ndcg_senti : m.mean_avg_polarity;
            }
        }
        throw IncompleteRun(std::string("missing overall mean for level ") +
                            metrics::level_name(l));
    };

    std::vector<metrics::Level> levels;
    for (const auto& m : overall) {
        if (m.engine == Engine::A &&
            std::find(levels.begin(), levels.end(), m.level) == levels.end()) {
            levels.push_back(m.level);
        }
    }
    std::sort(levels.begin(), levels.end());

    std::ostringstream pol;
    pol << "Sentiment-level," << csv_field(names.a) << "," << csv_field(names.b) << "\n";
    for (auto l : levels) {
        pol << metrics::level_table_label(l) << ","
            << format_fixed(overall_value(Engine::A, l, false), 4) << ","
            << format_fixed(overall_value(Engine::B, l, false), 4) << "\n";
    }
    bundle.files["tables/mean_avg_polarity.csv"] = pol.str();

    std::ostringstream ndcg;
    ndcg << "Sentiment-level," << csv_field(names.a) << "," << csv_field(names.b) << "\n";
    for (auto l : levels) {
        ndcg << metrics::level_table_label(l) << ","
             << format_fixed(overall_value(Engine::A, l, true), 4) << ","
             << format_fixed(overall_value(Engine::B, l, true), 4) << "\n";
    }
    bundle.files["tables/mean_ndcg_senti.csv"] = ndcg.str();

    std::ostringstream sig;
    sig << "Dataset,p-value," << csv_field("Is Statistically Significant?") << "\n";
    for (const auto& row : significance) {
        sig << csv_field(row.dataset) << "," << format_fixed(row.test.t.p, 4) << ","
            << (row.test.significant ? "YES" : "NO") << "\n";
    }
    bundle.files["tables/significance.csv"] = sig.str();

    // Full-precision per-topic values per level, the machine-readable side.
    for (auto l : levels) {
        std::ostringstream agg;
        agg << "topic,engine,mean_avg_polarity,mean_ndcg_senti,queries,degenerate_slates\n";
        std::vector<const metrics::TopicAggregate*> rows;
        for (const auto& a : aggregates) {
            if (a.level == l) rows.push_back(&a);
        }
        std::sort(rows.begin(), rows.end(),
                  [](const metrics::TopicAggregate* x, const metrics::TopicAggregate* y) {
                      return std::tie(x->topic_id, x->engine) < std::tie(y->topic_id, y->engine);
                  });
        for (const auto* a : rows) {
            agg << csv_field(a->topic_id) << ","
                << csv_field(a->engine == Engine::A ? names.a : names.b) << ","
                << format_full(a->mean_avg_polarity) << "," << format_full(a->mean_ndcg_senti)
                << "," << a->query_count << "," << a->degenerate_slates << "\n";
        }
        bundle.files[std::string("tables/topic_aggregates_") + level_dir(l) + ".csv"] =
            agg.str();
    }
}

void emit_topic_scatter(ReportBundle& bundle, const std::string& topic_id,
                        metrics::Level level, std::span<const ScatterPoint> pairs,
                        const metrics::ScatterCounts& counts,
                        const EngineNames& names) {
    std::string safe_topic = sanitize_filename(topic_id);

    std::ostringstream csv;
    csv << "query," << csv_field(names.a) << "," << csv_field(names.b) << "\n";
    for (const auto& p : pairs) {
        csv << csv_field(p.query) << "," << format_full(p.a) << "," << format_full(p.b)
            << "\n";
    }
    bundle.files[std::string("tables/scatter_") + level_dir(level) + "_" + safe_topic +
                 ".csv"] = csv.str();

    std::ostringstream svg;
    svg_header(svg, kScatterSize, kScatterSize);
    svg << "<title>Normalized NDCG Scores of " << xml_escape(display_topic(topic_id))
        << "</title>\n";
    svg << "<rect x=\"" << num2(sx(0)) << "\" y=\"" << num2(sy(1)) << "\" width=\""
        << num2(kScatterSpan) << "\" height=\"" << num2(kScatterSpan)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    // y = x diagonal
    svg << "<line x1=\"" << num2(sx(0)) << "\" y1=\"" << num2(sy(0)) << "\" x2=\""
        << num2(sx(1)) << "\" y2=\"" << num2(sy(1))
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    for (double tick : {0.0, 0.5, 1.0}) {
        svg << "<text x=\"" << num2(sx(tick)) << "\" y=\"" << num2(kScatterSize - 48.0)
            << "\" text-anchor=\"middle\" font-size=\"20\">" << format_fixed(tick, 1)
            << "</text>\n";
        svg << "<text x=\"" << num2(kScatterMargin - 16.0) << "\" y=\"" << num2(sy(tick) + 6.0)
            << "\" text-anchor=\"end\" font-size=\"20\">" << format_fixed(tick, 1)
            << "</text>\n";
    }
    svg << "<text x=\"" << num2(kScatterSize / 2.0) << "\" y=\"" << num2(kScatterSize - 16.0)
        << "\" text-anchor=\"middle\" font-size=\"22\">" << xml_escape(names.a)
        << "</text>\n";
    svg << "<text x=\"24\" y=\"" << num2(kScatterSize / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"22\" transform=\"rotate(-90 24 "
        << num2(kScatterSize / 2.0) << ")\">" << xml_escape(names.b) << "</text>\n";
    svg << "<text x=\"" << num2(kScatterSize / 2.0)
        << "\" y=\"40\" text-anchor=\"middle\" font-size=\"26\">Normalized NDCG Scores of "
        << xml_escape(display_topic(topic_id)) << "</text>\n";
    for (const auto& p : pairs) {
        svg << "<circle cx=\"" << num2(sx(p.a)) << "\" cy=\"" << num2(sy(p.b))
            << "\" r=\"5\" fill=\"steelblue\" fill-opacity=\"0.7\" data-query=\""
            << xml_escape(p.query) << "\" data-a=\"" << format_full(p.a) << "\" data-b=\""
            << format_full(p.b) << "\"/>\n";
    }
    svg << "<text x=\"" << num2(kScatterMargin) << "\" y=\"64\" font-size=\"20\">above = "
        << counts.above << ", below = " << counts.below << ", on = " << counts.on
        << "</text>\n";
    svg << "</svg>\n";
    bundle.files[std::string("figures/") + level_dir(level) + "/" + safe_topic + ".svg"] =
        svg.str();
}

void emit_overall_bars(ReportBundle& bundle, metrics::Level level,
                       std::span<const metrics::TopicAggregate> aggregates,
                       bool use_ndcg, const EngineNames& names) {
    std::map<std::string, std::pair<double, double>> by_topic;  // topic -> (a, b)
    for (const auto& a : aggregates) {
        if (a.level != level) continue;
        double v = use_ndcg ? a.mean_ndcg_senti : a.mean_avg_polarity;
        auto& slot = by_topic[a.topic_id];
        (a.engine == Engine::A ? slot.first : slot.second) = v;
    }

    const std::string metric = use_ndcg ? "ndcg" : "avgpol";
    std::ostringstream csv;
    csv << "topic," << csv_field(names.a) << "," << csv_field(names.b) << "\n";
    for (const auto& [topic, vals] : by_topic) {
        csv << csv_field(topic) << "," << format_full(vals.first) << ","
            << format_full(vals.second) << "\n";
    }
    bundle.files[std::string("tables/bars_") + level_dir(level) + "_" + metric + ".csv"] =
        csv.str();

    // Chart: 1000x600, margins 80/40; NDCG plots on [0,1], polarity on [-1,1].
    const double width = 1000.0;
    const double height = 600.0;
    const double left = 80.0;
    const double top = 80.0;
    const double plot_w = width - left - 40.0;
    const double plot_h = height - top - 120.0;
    const double vmin = use_ndcg ? 0.0 : -1.0;
    const double vmax = 1.0;
    auto y_of = [&](double v) { return top + (vmax - v) / (vmax - vmin) * plot_h; };

    std::ostringstream svg;
    svg_header(svg, width, height);
    svg << "<title>" << (use_ndcg ? "Avg-Normalized NDCG Scores" : "Mean Avg-Pol Scores")
        << " per Topic</title>\n";
    svg << "<text x=\"" << num2(width / 2.0) << "\" y=\"40\" text-anchor=\"middle\" "
        << "font-size=\"26\">"
        << (use_ndcg ? "Avg-Normalized NDCG Scores" : "Mean Avg-Pol Scores") << " of "
        << by_topic.size() << " Controversial Topics</text>\n";
    svg << "<line x1=\"" << num2(left) << "\" y1=\"" << num2(y_of(0.0)) << "\" x2=\""
        << num2(left + plot_w) << "\" y2=\"" << num2(y_of(0.0))
        << "\" stroke=\"black\"/>\n";

    if (!by_topic.empty()) {
        double group_w = plot_w / static_cast<double>(by_topic.size());
        double bar_w = group_w * 0.35;
        std::size_t idx = 0;
        for (const auto& [topic, vals] : by_topic) {
            double gx = left + group_w * (static_cast<double>(idx) + 0.5);
            const std::pair<double, const char*> bars[2] = {{vals.first, "steelblue"},
                                                            {vals.second, "indianred"}};
            for (int side = 0; side < 2; ++side) {
                double v = bars[side].first;
                double x = gx + (side == 0 ? -bar_w : 0.0);
                double y0 = y_of(std::max(v, 0.0));
                double h = std::fabs(y_of(v) - y_of(0.0));
                svg << "<rect x=\"" << num2(x) << "\" y=\"" << num2(y0) << "\" width=\""
                    << num2(bar_w) << "\" height=\"" << num2(h) << "\" fill=\""
                    << bars[side].second << "\" data-topic=\"" << xml_escape(topic)
                    << "\" data-engine=\""
                    << xml_escape(side == 0 ? names.a : names.b) << "\" data-value=\""
                    << format_full(v) << "\"/>\n";
            }
            svg << "<text x=\"" << num2(gx) << "\" y=\"" << num2(height - 72.0)
                << "\" text-anchor=\"end\" font-size=\"14\" transform=\"rotate(-45 "
                << num2(gx) << " " << num2(height - 72.0) << ")\">" << xml_escape(topic)
                << "</text>\n";
            ++idx;
        }
    }
    svg << "<rect x=\"" << num2(left) << "\" y=\"" << num2(height - 40.0)
        << "\" width=\"14\" height=\"14\" fill=\"steelblue\"/>\n";
    svg << "<text x=\"" << num2(left + 20.0) << "\" y=\"" << num2(height - 28.0)
        << "\" font-size=\"16\">" << xml_escape(names.a) << "</text>\n";
    svg << "<rect x=\"" << num2(left + 140.0) << "\" y=\"" << num2(height - 40.0)
        << "\" width=\"14\" height=\"14\" fill=\"indianred\"/>\n";
    svg << "<text x=\"" << num2(left + 160.0) << "\" y=\"" << num2(height - 28.0)
        << "\" font-size=\"16\">" << xml_escape(names.b) << "</text>\n";
    svg << "</svg>\n";
    bundle.files[std::string("figures/") + level_dir(level) + "/overall_" + metric +
                 ".svg"] = svg.str();
}

void emit_sample_diagnostics(ReportBundle& bundle, const std::string& dataset,
                             const std::string& engine_tag, const stats::Sample& sample) {
    std::string base = sanitize_filename(dataset) + "_" + sanitize_filename(engine_tag);

    std::size_t bins = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(sample.size())))));
    std::ostringstream hist;
    hist << "bin_lower,count\n";
    for (const auto& b : stats::histogram(sample, bins)) {
        hist << format_full(b.lower) << "," << b.count << "\n";
    }
    bundle.files["tables/hist_" + base + ".csv"] = hist.str();

    std::ostringstream qq;
    qq << "theoretical,sample\n";
    for (const auto& [t, s] : stats::qq_points(sample)) {
        qq << format_full(t) << "," << format_full(s) << "\n";
    }
    bundle.files["tables/qq_" + base + ".csv"] = qq.str();
}

void emit_degenerate_slates(ReportBundle& bundle,
                            std::span<const DegenerateSlate> rows,
                            const EngineNames& names) {
    std::vector<const DegenerateSlate*> sorted;
    sorted.reserve(rows.size());
    for (const auto& r : rows) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const DegenerateSlate* x, const DegenerateSlate* y) {
                  return std::tie(x->level, x->topic_id, x->query, x->engine) <
                         std::tie(y->level, y->topic_id, y->query, y->engine);
              });
    std::ostringstream csv;
    csv << "level,topic,query,engine\n";
    for (const auto* r : sorted) {
        csv << level_dir(r->level) << "," << csv_field(r->topic_id) << ","
            << csv_field(r->query) << ","
            << csv_field(r->engine == Engine::A ? names.a : names.b) << "\n";
    }
    bundle.files["tables/degenerate_slates.csv"] = csv.str();
}

}  // namespace serpaudit::report
