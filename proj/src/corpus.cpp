#include "serpaudit/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "serpaudit/errors.hpp"
#include "serpaudit/text.hpp"

namespace serpaudit {

namespace {

using nlohmann::json;

constexpr int kSlateSize = 10;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

Engine parse_engine(const std::string& file, std::size_t lineno, const std::string& s) {
    if (s == "A") return Engine::A;
    if (s == "B") return Engine::B;
    throw ParseError(file, lineno, "engine must be 'A' or 'B', got '" + s + "'");
}

WordPos parse_word_pos(const std::string& file, std::size_t lineno, const std::string& s) {
    if (s == "NOUN") return WordPos::Noun;
    if (s == "VERB") return WordPos::Verb;
    if (s == "ADJ") return WordPos::Adj;
    if (s == "ADV") return WordPos::Adv;
    if (s == "OTHER") return WordPos::Other;
    throw ParseError(file, lineno, "unknown word_pos '" + s + "'");
}

std::vector<Document> parse_documents_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open documents file: " + path);

    static const std::set<std::string> kKeys = {"doc_id", "engine", "topic_id",
                                                "query",  "rank",   "title",
                                                "body"};
    std::vector<Document> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object()) {
            throw ParseError(path, lineno, "malformed JSON record");
        }
        std::set<std::string> keys;
        for (auto it = rec.begin(); it != rec.end(); ++it) keys.insert(it.key());
        if (keys != kKeys) {
            throw ParseError(path, lineno,
                             "record keys must be exactly {doc_id, engine, topic_id, "
                             "query, rank, title, body}");
        }
        for (const char* k : {"doc_id", "engine", "topic_id", "query", "title", "body"}) {
            if (!rec[k].is_string()) {
                throw ParseError(path, lineno, std::string("field '") + k + "' must be a string");
            }
        }
        if (!rec["rank"].is_number_integer()) {
            throw ParseError(path, lineno, "field 'rank' must be an integer");
        }
        Document d;
        d.doc_id = rec["doc_id"].get<std::string>();
        d.engine = parse_engine(path, lineno, rec["engine"].get<std::string>());
        d.topic_id = rec["topic_id"].get<std::string>();
        d.query = rec["query"].get<std::string>();
        d.rank = rec["rank"].get<int>();
        d.title = rec["title"].get<std::string>();
        d.body = rec["body"].get<std::string>();
        if (d.doc_id.empty()) throw ParseError(path, lineno, "doc_id is empty");
        if (d.rank < 1 || d.rank > kSlateSize) {
            throw ParseError(path, lineno, "rank " + std::to_string(d.rank) +
                                               " out of [1,10] for doc '" + d.doc_id + "'");
        }
        if (trim(d.body).empty()) {
            throw ParseError(path, lineno, "empty body for doc '" + d.doc_id + "'");
        }
        docs.push_back(std::move(d));
    }
    return docs;
}

std::vector<DependencyTriple> parse_triples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open triples file: " + path);

    std::vector<DependencyTriple> triples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line[0] == '#') continue;
        auto fields = split_on(line, '\t');
        if (fields.size() != 6) {
            throw ParseError(path, lineno, "expected 6 tab-separated fields, got " +
                                               std::to_string(fields.size()));
        }
        DependencyTriple t;
        t.doc_id = fields[0];
        int idx = -1;
        auto res = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), idx);
        if (res.ec != std::errc{} || res.ptr != fields[1].data() + fields[1].size() || idx < 0) {
            throw ParseError(path, lineno, "invalid sentence_idx '" + fields[1] + "'");
        }
        t.sentence_idx = idx;
        t.word = text::to_lower(fields[2]);
        t.relation = fields[3];
        t.keyword = text::to_lower(fields[4]);
        t.word_pos = parse_word_pos(path, lineno, fields[5]);
        if (t.doc_id.empty() || t.word.empty() || t.keyword.empty()) {
            throw ParseError(path, lineno, "empty field in triple");
        }
        triples.push_back(std::move(t));
    }
    return triples;
}

}  // namespace

const char* word_pos_name(WordPos p) {
    switch (p) {
        case WordPos::Noun: return "NOUN";
        case WordPos::Verb: return "VERB";
        case WordPos::Adj: return "ADJ";
        case WordPos::Adv: return "ADV";
        case WordPos::Other: return "OTHER";
    }
    return "OTHER";
}

std::vector<std::string> extract_topic_keywords(const std::string& title) {
    auto tokens = text::tokenize(title);
    if (tokens.empty()) throw EmptyTitle();
    return tokens;
}

TopicsFile load_topics(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open topics file: " + path);

    TopicsFile out;
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (line[0] == '#') {
            // "#engine A Bing" binds a display name; other comments are skipped.
            std::istringstream is(line.substr(1));
            std::string kw, which, name;
            if (is >> kw >> which && kw == "engine" && std::getline(is, name)) {
                name = trim(name);
                if (which == "A" && !name.empty()) out.engine_names.a = name;
                if (which == "B" && !name.empty()) out.engine_names.b = name;
            }
            continue;
        }
        auto fields = split_on(line, '\t');
        if (fields.size() != 4) {
            throw ParseError(path, lineno, "expected 4 tab-separated fields, got " +
                                               std::to_string(fields.size()));
        }
        Topic t;
        t.topic_id = trim(fields[0]);
        t.title = trim(fields[1]);
        if (t.topic_id.empty()) throw ParseError(path, lineno, "empty topic_id");
        std::string sign = trim(fields[2]);
        if (sign == "+1" || sign == "1") {
            t.stance_sign = +1;
        } else if (sign == "-1") {
            t.stance_sign = -1;
        } else {
            throw ParseError(path, lineno, "stance_sign must be +1 or -1, got '" + sign + "'");
        }
        try {
            t.keywords = extract_topic_keywords(t.title);
        } catch (const EmptyTitle&) {
            throw ParseError(path, lineno, "empty title for topic '" + t.topic_id + "'");
        }
        for (auto& q : split_on(fields[3], ',')) {
            std::string query = trim(q);
            if (!query.empty()) t.query_ids.push_back(std::move(query));
        }
        if (t.query_ids.empty()) {
            throw ParseError(path, lineno, "topic '" + t.topic_id + "' lists no queries");
        }
        if (!seen.insert(t.topic_id).second) {
            throw ParseError(path, lineno, "duplicate topic_id '" + t.topic_id + "'");
        }
        out.topics.push_back(std::move(t));
    }
    return out;
}

Corpus load_corpus(const std::string& documents_path, const std::string& topics_path,
                   const std::optional<std::string>& triples_path) {
    Corpus corpus;

    for (auto& topic : load_topics(topics_path).topics) {
        corpus.topics_.emplace(topic.topic_id, std::move(topic));
    }

    auto docs = parse_documents_file(documents_path);
    for (auto& d : docs) {
        auto topic_it = corpus.topics_.find(d.topic_id);
        if (topic_it == corpus.topics_.end()) {
            throw ValidationError("doc '" + d.doc_id + "' references unknown topic '" +
                                  d.topic_id + "'");
        }
        const auto& registered = topic_it->second.query_ids;
        if (std::find(registered.begin(), registered.end(), d.query) == registered.end()) {
            throw ValidationError("doc '" + d.doc_id + "' uses query '" + d.query +
                                  "' not registered under topic '" + d.topic_id + "'");
        }
        auto key = std::make_pair(d.engine, d.doc_id);
        if (corpus.documents_.contains(key)) {
            throw ValidationError("duplicate doc_id '" + d.doc_id + "' for engine " +
                                  engine_key(d.engine));
        }
        corpus.documents_.emplace(std::move(key), std::move(d));
    }

    // Group into slates; enforce 10 distinct contiguous ranks per group.
    for (const auto& [key, doc] : corpus.documents_) {
        auto slate_key = std::make_pair(doc.engine, doc.query);
        auto& slate = corpus.slates_[slate_key];
        if (slate.docs.empty()) {
            slate.engine = doc.engine;
            slate.topic_id = doc.topic_id;
            slate.query = doc.query;
            slate.docs.assign(kSlateSize, nullptr);
        }
        if (slate.topic_id != doc.topic_id) {
            throw ValidationError("query '" + doc.query + "' appears under topics '" +
                                  slate.topic_id + "' and '" + doc.topic_id + "'");
        }
        if (slate.docs[doc.rank - 1] != nullptr) {
            throw ValidationError("duplicate rank " + std::to_string(doc.rank) +
                                  " in query '" + doc.query + "' for engine " +
                                  engine_key(doc.engine));
        }
        slate.docs[doc.rank - 1] = &doc;
    }
    for (const auto& [key, slate] : corpus.slates_) {
        for (int r = 1; r <= kSlateSize; ++r) {
            if (slate.docs[r - 1] == nullptr) {
                throw ValidationError("query '" + slate.query + "' for engine " +
                                      engine_key(key.first) + " is missing rank " +
                                      std::to_string(r));
            }
        }
    }

    // Paired analysis needs the same query set on both sides.
    std::set<std::string> queries_a, queries_b;
    for (const auto& [key, slate] : corpus.slates_) {
        (key.first == Engine::A ? queries_a : queries_b).insert(key.second);
    }
    for (const auto& q : queries_a) {
        if (!queries_b.contains(q)) {
            throw ValidationError("query '" + q + "' present for engine A but missing for B");
        }
    }
    for (const auto& q : queries_b) {
        if (!queries_a.contains(q)) {
            throw ValidationError("query '" + q + "' present for engine B but missing for A");
        }
    }

    if (triples_path) {
        for (auto& t : parse_triples_file(*triples_path)) {
            if (corpus.find_documents(t.doc_id).empty()) {
                throw ValidationError("triple references unknown doc_id '" + t.doc_id + "'");
            }
            corpus.triples_[t.doc_id].push_back(std::move(t));
        }
    }

    return corpus;
}

const Topic& Corpus::topic(const std::string& topic_id) const {
    auto it = topics_.find(topic_id);
    if (it == topics_.end()) throw ValidationError("unknown topic '" + topic_id + "'");
    return it->second;
}

const QuerySlate& Corpus::slate(Engine engine, const std::string& query) const {
    auto it = slates_.find(std::make_pair(engine, query));
    if (it == slates_.end()) {
        throw ValidationError("no slate for query '" + query + "' on engine " +
                              engine_key(engine));
    }
    return it->second;
}

std::vector<const Document*> Corpus::find_documents(const std::string& doc_id) const {
    std::vector<const Document*> out;
    for (Engine e : {Engine::A, Engine::B}) {
        auto it = documents_.find(std::make_pair(e, doc_id));
        if (it != documents_.end()) out.push_back(&it->second);
    }
    return out;
}

const std::vector<DependencyTriple>& Corpus::triples_for(const std::string& doc_id) const {
    static const std::vector<DependencyTriple> kEmpty;
    auto it = triples_.find(doc_id);
    return it == triples_.end() ? kEmpty : it->second;
}

std::vector<std::string> Corpus::queries_for_topic(const std::string& topic_id) const {
    std::vector<std::string> out;
    for (const auto& [key, slate] : slates_) {
        if (key.first == Engine::A && slate.topic_id == topic_id) out.push_back(key.second);
    }
    return out;  // map iteration is already sorted
}

std::size_t Corpus::document_count(Engine e) const {
    std::size_t n = 0;
    for (const auto& [key, _] : documents_) {
        if (key.first == e) ++n;
    }
    return n;
}

void save_documents(const Corpus& corpus, const std::string& path) {
    std::vector<const Document*> docs;
    docs.reserve(corpus.documents().size());
    for (const auto& [_, d] : corpus.documents()) docs.push_back(&d);
    std::sort(docs.begin(), docs.end(), [](const Document* a, const Document* b) {
        return std::tie(a->engine, a->topic_id, a->query, a->rank) <
               std::tie(b->engine, b->topic_id, b->query, b->rank);
    });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write documents file: " + path);
    for (const Document* d : docs) {
        json rec;
        rec["doc_id"] = d->doc_id;
        rec["engine"] = engine_key(d->engine);
        rec["topic_id"] = d->topic_id;
        rec["query"] = d->query;
        rec["rank"] = d->rank;
        rec["title"] = d->title;
        rec["body"] = d->body;
        out << rec.dump() << '\n';
    }
}

std::vector<TopicCount> topic_distribution(const Corpus& corpus) {
    std::map<std::string, TopicCount> by_topic;
    for (const auto& [key, doc] : corpus.documents()) {
        auto& row = by_topic[doc.topic_id];
        row.topic_id = doc.topic_id;
        if (doc.engine == Engine::A) {
            ++row.docs_a;
        } else {
            ++row.docs_b;
        }
    }
    std::vector<TopicCount> out;
    out.reserve(by_topic.size());
    for (auto& [_, row] : by_topic) out.push_back(std::move(row));
    return out;
}

}  // namespace serpaudit
