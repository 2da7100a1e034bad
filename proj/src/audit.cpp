#include "serpaudit/audit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "serpaudit/aspect.hpp"
#include "serpaudit/errors.hpp"
#include "serpaudit/sentiment.hpp"
#include "serpaudit/stats.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit::audit {

namespace {

using metrics::GainForm;
using metrics::Level;

std::string level_csv(const std::vector<Level>& levels) {
    std::string out;
    for (auto l : levels) {
        if (!out.empty()) out += ",";
        out += report::level_dir(l);
    }
    return out;
}

// "DOCLevel" / "SENTLevel" / "ASPLevel", the published dataset prefixes.
std::string dataset_prefix(Level l) {
    switch (l) {
        case Level::Doc: return "DOCLevel";
        case Level::Sent: return "SENTLevel";
        case Level::Aspect: return "ASPLevel";
    }
    return "DOCLevel";
}

struct LevelResults {
    Level level = Level::Doc;
    std::vector<metrics::SlateScores> slates;  // both engines
    std::vector<metrics::TopicAggregate> aggregates;
};

// Raw polarity of every document at one level, computed in parallel and
// merged by (engine, doc_id) so the fan-out order never shows.
std::map<std::pair<Engine, std::string>, double> score_all_documents(
    const Corpus& corpus, const Lexicon& lexicon, Level level, unsigned threads) {
    std::vector<const Document*> docs;
    docs.reserve(corpus.documents().size());
    for (const auto& [key, d] : corpus.documents()) docs.push_back(&d);

    std::vector<double> values(docs.size(), 0.0);
    parallel_for(docs.size(), threads, [&](std::size_t i) {
        const Document& d = *docs[i];
        switch (level) {
            case Level::Doc:
                values[i] = sentiment::score_document(lexicon, d).value;
                break;
            case Level::Sent:
                values[i] = sentiment::score_sentence_level(lexicon, d).value;
                break;
            case Level::Aspect: {
                auto ctx = aspect::filter_triples(corpus.triples_for(d.doc_id),
                                                  corpus.topic(d.topic_id));
                values[i] = aspect::score_aspect_level(lexicon, ctx).value;
                break;
            }
        }
    });

    std::map<std::pair<Engine, std::string>, double> out;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        out[{docs[i]->engine, docs[i]->doc_id}] = values[i];
    }
    return out;
}

LevelResults compute_level(const Corpus& corpus, const Lexicon& lexicon, Level level,
                           GainForm gain, unsigned threads) {
    LevelResults res;
    res.level = level;
    auto doc_scores = score_all_documents(corpus, lexicon, level, threads);

    for (const auto& [key, slate] : corpus.slates()) {
        std::vector<double> raw;
        raw.reserve(slate.docs.size());
        for (const Document* d : slate.docs) {
            raw.push_back(doc_scores.at({d->engine, d->doc_id}));
        }
        res.slates.push_back(
            metrics::score_slate(slate, corpus.topic(slate.topic_id), level, raw));
    }

    // Aggregate per (topic, engine), topics in lexicographic order.
    std::map<std::pair<std::string, Engine>, std::vector<metrics::SlateScores>> groups;
    for (auto& s : res.slates) {
        groups[{s.topic_id, s.engine}].push_back(s);
    }
    for (auto& [key, group] : groups) {
        res.aggregates.push_back(metrics::aggregate_topic(group, gain));
    }
    return res;
}

void print_table(std::ostream& out, const std::string& title,
                 const std::string& csv_payload) {
    out << "\n" << title << "\n";
    std::istringstream lines(csv_payload);
    std::string line;
    while (std::getline(lines, line)) {
        std::string rendered;
        bool quoted = false;
        for (char c : line) {
            if (c == '"') {
                quoted = !quoted;
            } else if (c == ',' && !quoted) {
                rendered += "  ";
            } else {
                rendered.push_back(c);
            }
        }
        out << "  " << rendered << "\n";
    }
}

}  // namespace

std::string RunConfig::canonical() const {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["docs"] = documents_path;
    j["gain"] = gain == GainForm::Linear ? "linear" : "exp";
    j["levels"] = level_csv(levels);
    j["lexicon"] = lexicon_path;
    j["out"] = output_dir;
    j["seed"] = seed;
    j["topics"] = topics_path;
    j["triples"] = triples_path ? *triples_path : "";
    return j.dump();
}

std::string RunConfig::checksum() const { return sha256_hex(canonical()); }

void RunConfig::validate() const {
    if (documents_path.empty()) throw ConfigError("documents path is required");
    if (topics_path.empty()) throw ConfigError("topics path is required");
    if (lexicon_path.empty()) throw ConfigError("lexicon path is required");
    if (levels.empty()) throw ConfigError("at least one level must be requested");
    bool wants_aspect =
        std::find(levels.begin(), levels.end(), Level::Aspect) != levels.end();
    if (wants_aspect && !triples_path) {
        throw ConfigError("aspect level requested but no triples file given");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
}

Level parse_level(const std::string& s) {
    if (s == "doc") return Level::Doc;
    if (s == "sent") return Level::Sent;
    if (s == "aspect") return Level::Aspect;
    throw ConfigError("unknown level '" + s + "' (expected doc, sent or aspect)");
}

std::vector<Level> parse_levels(const std::string& csv) {
    std::vector<Level> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        Level l = parse_level(token);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    if (out.empty()) throw ConfigError("no levels given");
    std::sort(out.begin(), out.end());
    return out;
}

GainForm parse_gain(const std::string& s) {
    if (s == "linear") return GainForm::Linear;
    if (s == "exp") return GainForm::Exponential;
    throw ConfigError("unknown gain form '" + s + "' (expected linear or exp)");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ConfigError("config file is not a JSON object: " + path);
    }
    RunConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        auto as_string = [&]() -> std::string {
            if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
            return v.get<std::string>();
        };
        if (key == "docs") {
            cfg.documents_path = as_string();
        } else if (key == "topics") {
            cfg.topics_path = as_string();
        } else if (key == "triples") {
            std::string p = as_string();
            if (!p.empty()) cfg.triples_path = p;
        } else if (key == "lexicon") {
            cfg.lexicon_path = as_string();
        } else if (key == "out") {
            cfg.output_dir = as_string();
        } else if (key == "levels") {
            if (v.is_array()) {
                std::string csv;
                for (const auto& e : v) {
                    if (!csv.empty()) csv += ",";
                    csv += e.get<std::string>();
                }
                cfg.levels = parse_levels(csv);
            } else {
                cfg.levels = parse_levels(as_string());
            }
        } else if (key == "gain") {
            cfg.gain = parse_gain(as_string());
        } else if (key == "alpha") {
            if (!v.is_number()) throw ConfigError("config key 'alpha' must be a number");
            cfg.alpha = v.get<double>();
        } else if (key == "seed") {
            if (!v.is_number_integer()) throw ConfigError("config key 'seed' must be an integer");
            cfg.seed = v.get<long>();
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ValidationSummary run_validate(const RunConfig& config, std::ostream& out) {
    config.validate();
    Corpus corpus = load_corpus(config.documents_path, config.topics_path,
                                config.triples_path);
    ValidationSummary s;
    s.documents_a = corpus.document_count(Engine::A);
    s.documents_b = corpus.document_count(Engine::B);
    s.topics = corpus.topics().size();
    s.queries = corpus.slates().size() / 2;
    out << "corpus OK: " << s.documents_a << " documents (A), " << s.documents_b
        << " documents (B), " << s.topics << " topics, " << s.queries
        << " queries per engine\n";
    return s;
}

report::ReportBundle run_audit(const RunConfig& config, std::ostream& out) {
    config.validate();
    const auto topics_file = load_topics(config.topics_path);
    const EngineNames& names = topics_file.engine_names;
    Corpus corpus = load_corpus(config.documents_path, config.topics_path,
                                config.triples_path);
    Lexicon lexicon = load_lexicon(config.lexicon_path);
    unsigned threads = config.threads > 0 ? config.threads : default_thread_count();

    report::ReportBundle bundle;
    bundle.config_checksum = config.checksum();
    bundle.run_id =
        "run-" + sha256_hex(bundle.config_checksum + ":" +
                            sha256_file_hex(config.documents_path) + ":" +
                            sha256_file_hex(config.lexicon_path))
                     .substr(0, 12);

    report::emit_topic_distribution(bundle, corpus, names);

    std::vector<metrics::TopicAggregate> all_aggregates;
    std::vector<report::SignificanceRow> significance;
    std::vector<report::DegenerateSlate> degenerate;

    std::vector<Level> levels = config.levels;
    std::sort(levels.begin(), levels.end());

    for (Level level : levels) {
        LevelResults res = compute_level(corpus, lexicon, level, config.gain, threads);
        all_aggregates.insert(all_aggregates.end(), res.aggregates.begin(),
                              res.aggregates.end());

        for (const auto& s : res.slates) {
            if (s.degenerate) {
                degenerate.push_back({s.topic_id, s.query, s.engine, level});
            }
        }

        // Scatter data: per-query NDCG-Senti pairs per topic.
        for (const auto& [topic_id, topic] : corpus.topics()) {
            auto queries = corpus.queries_for_topic(topic_id);
            if (queries.empty()) continue;
            std::vector<report::ScatterPoint> points;
            std::vector<std::pair<double, double>> pairs;
            for (const auto& q : queries) {
                double va = 0.0, vb = 0.0;
                for (const auto& s : res.slates) {
                    if (s.query == q) {
                        (s.engine == Engine::A ? va : vb) =
                            metrics::ndcg_senti(s, config.gain);
                    }
                }
                points.push_back({q, va, vb});
                pairs.emplace_back(va, vb);
            }
            auto counts = metrics::scatter_counts(pairs);
            report::emit_topic_scatter(bundle, topic_id, level, points, counts, names);
        }

        report::emit_overall_bars(bundle, level, res.aggregates, false, names);
        report::emit_overall_bars(bundle, level, res.aggregates, true, names);

        // Significance: engine samples of per-topic aggregate values.
        for (bool use_ndcg : {false, true}) {
            std::string dataset = dataset_prefix(level) +
                                  (use_ndcg ? "_AvgNDCGScore" : "_MeanAvgScore");
            std::vector<double> va, vb;
            for (const auto& a : res.aggregates) {
                double v = use_ndcg ? a.mean_ndcg_senti : a.mean_avg_polarity;
                (a.engine == Engine::A ? va : vb).push_back(v);
            }
            stats::Sample sample_a(dataset + "/" + names.a, std::move(va));
            stats::Sample sample_b(dataset + "/" + names.b, std::move(vb));
            report::emit_sample_diagnostics(bundle, dataset, "A", sample_a);
            report::emit_sample_diagnostics(bundle, dataset, "B", sample_b);
            significance.push_back(
                {dataset, stats::significance_pipeline(sample_a, sample_b, config.alpha)});
        }
    }

    // Table 5 order: the MeanAvgScore block, then the AvgNDCGScore block.
    std::stable_sort(significance.begin(), significance.end(),
                     [](const report::SignificanceRow& x, const report::SignificanceRow& y) {
                         auto rank = [](const std::string& d) {
                             return d.find("MeanAvgScore") != std::string::npos ? 0 : 1;
                         };
                         return rank(x.dataset) < rank(y.dataset);
                     });

    auto overall = metrics::overall_means(all_aggregates);
    report::emit_aggregate_tables(bundle, all_aggregates, overall, significance, names);
    report::emit_degenerate_slates(bundle, degenerate, names);

    bundle.write(config.output_dir);

    out << "run " << bundle.run_id << " (config " << bundle.config_checksum.substr(0, 12)
        << ")\n";
    print_table(out, "Mean of Mean Average Sentiment Scores",
                bundle.files.at("tables/mean_avg_polarity.csv"));
    print_table(out, "Mean Average NDCG-Senti Scores",
                bundle.files.at("tables/mean_ndcg_senti.csv"));
    print_table(out, "Two-tail t-test p-values",
                bundle.files.at("tables/significance.csv"));
    out << "\nwrote " << bundle.files.size() + 1 << " files to " << config.output_dir
        << "\n";
    return bundle;
}

void run_score(const RunConfig& config, const std::string& doc_id, std::ostream& out) {
    config.validate();
    Corpus corpus = load_corpus(config.documents_path, config.topics_path,
                                config.triples_path);
    Lexicon lexicon = load_lexicon(config.lexicon_path);

    auto docs = corpus.find_documents(doc_id);
    if (docs.empty()) throw UnknownDoc(doc_id);

    for (const Document* d : docs) {
        const Topic& topic = corpus.topic(d->topic_id);
        out << "doc " << d->doc_id << " (engine " << engine_key(d->engine) << ", topic "
            << d->topic_id << ", query '" << d->query << "', rank " << d->rank << ")\n";
        for (Level level : config.levels) {
            Polarity raw(0.0);
            switch (level) {
                case Level::Doc:
                    raw = sentiment::score_document(lexicon, *d);
                    break;
                case Level::Sent:
                    raw = sentiment::score_sentence_level(lexicon, *d);
                    break;
                case Level::Aspect: {
                    auto ctx = aspect::filter_triples(corpus.triples_for(d->doc_id), topic);
                    raw = aspect::score_aspect_level(lexicon, ctx);
                    if (!ctx.related_words.empty()) {
                        out << "  aspect words:";
                        for (const auto& rw : ctx.related_words) {
                            out << " " << rw.word << "(" << rw.relation << ">" << rw.keyword
                                << ")";
                        }
                        out << "\n";
                    }
                    break;
                }
            }
            Polarity transformed = metrics::transform_stance(topic, raw);
            out << "  " << metrics::level_name(level) << ": raw " << format_full(raw.value)
                << ", transformed " << format_full(transformed.value) << "\n";
        }
    }
}

}  // namespace serpaudit::audit
