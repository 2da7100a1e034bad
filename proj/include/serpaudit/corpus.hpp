#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace serpaudit {

enum class Engine { A, B };

constexpr const char* engine_key(Engine e) { return e == Engine::A ? "A" : "B"; }

enum class WordPos { Noun, Verb, Adj, Adv, Other };

const char* word_pos_name(WordPos p);

// One retrieved search result.
struct Document {
    std::string doc_id;
    Engine engine = Engine::A;
    std::string topic_id;
    std::string query;
    int rank = 0;  // 1..10
    std::string title;
    std::string body;

    friend bool operator==(const Document&, const Document&) = default;
};

struct Topic {
    std::string topic_id;
    std::string title;
    std::vector<std::string> keywords;  // tokenized title
    int stance_sign = +1;               // -1 flips polarity onto the shared axis
    std::vector<std::string> query_ids;

    friend bool operator==(const Topic&, const Topic&) = default;
};

// The ordered 10-document list one engine returned for one query.
struct QuerySlate {
    Engine engine = Engine::A;
    std::string topic_id;
    std::string query;
    std::vector<const Document*> docs;  // ascending rank, exactly 10
};

// (word, relation, keyword) link from an external dependency parse.
struct DependencyTriple {
    std::string doc_id;
    int sentence_idx = 0;
    std::string word;
    std::string relation;
    std::string keyword;
    WordPos word_pos = WordPos::Other;

    friend bool operator==(const DependencyTriple&, const DependencyTriple&) = default;
};

class Corpus {
public:
    // Slates point into the documents map, so copies are forbidden; std::map
    // moves keep nodes in place.
    Corpus() = default;
    Corpus(const Corpus&) = delete;
    Corpus& operator=(const Corpus&) = delete;
    Corpus(Corpus&&) = default;
    Corpus& operator=(Corpus&&) = default;

    // Keyed by (engine, doc_id): the same doc_id may legitimately appear in
    // both engines' result sets.
    const std::map<std::pair<Engine, std::string>, Document>& documents() const {
        return documents_;
    }
    const std::map<std::string, Topic>& topics() const { return topics_; }
    const std::map<std::pair<Engine, std::string>, QuerySlate>& slates() const {
        return slates_;
    }
    const std::map<std::string, std::vector<DependencyTriple>>& triples() const {
        return triples_;
    }

    const Topic& topic(const std::string& topic_id) const;
    const QuerySlate& slate(Engine engine, const std::string& query) const;
    std::vector<const Document*> find_documents(const std::string& doc_id) const;
    const std::vector<DependencyTriple>& triples_for(const std::string& doc_id) const;

    // Queries of one topic, sorted; identical for both engines by validation.
    std::vector<std::string> queries_for_topic(const std::string& topic_id) const;

    std::size_t document_count(Engine e) const;

private:
    friend Corpus load_corpus(const std::string&, const std::string&,
                              const std::optional<std::string>&);
    std::map<std::pair<Engine, std::string>, Document> documents_;
    std::map<std::string, Topic> topics_;
    std::map<std::pair<Engine, std::string>, QuerySlate> slates_;
    std::map<std::string, std::vector<DependencyTriple>> triples_;
};

// Engine display names declared in the topics file ("#engine A Bing").
struct EngineNames {
    std::string a = "A";
    std::string b = "B";

    const std::string& of(Engine e) const { return e == Engine::A ? a : b; }
};

struct TopicsFile {
    std::vector<Topic> topics;
    EngineNames engine_names;
};

// Fully validated corpus from a documents file (JSON lines), a topics file,
// and an optional triples file. Throws ParseError / ValidationError naming
// the offending record.
Corpus load_corpus(const std::string& documents_path, const std::string& topics_path,
                   const std::optional<std::string>& triples_path = std::nullopt);

TopicsFile load_topics(const std::string& path);

// Writes documents back in the line-delimited format, canonical order
// (engine, topic, query, rank); reloading yields a field-identical corpus.
void save_documents(const Corpus& corpus, const std::string& path);

// (topic_id, docs for engine A, docs for engine B), lexicographic by topic.
struct TopicCount {
    std::string topic_id;
    std::size_t docs_a = 0;
    std::size_t docs_b = 0;
};
std::vector<TopicCount> topic_distribution(const Corpus& corpus);

// Lowercased, punctuation-stripped tokens of a topic title.
// Throws EmptyTitle when nothing survives.
std::vector<std::string> extract_topic_keywords(const std::string& title);

}  // namespace serpaudit
