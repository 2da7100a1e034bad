#include "support/fixtures.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "serpaudit/corpus.hpp"

namespace fixtures {

namespace fs = std::filesystem;

serpaudit::Lexicon tiny_lexicon() {
    serpaudit::Lexicon lex;
    lex.entries = {{"good", 0.7},    {"bad", -0.7},   {"great", 0.8},  {"awful", -0.8},
                   {"illegal", -0.5}, {"ban", -0.4},  {"nice", 0.6},   {"chaotic", -0.6},
                   {"rights", 0.3},   {"risk", -0.4}, {"support", 0.4}, {"happy", 0.6},
                   {"sad", -0.6},     {"calm", 0.3}};
    lex.negators = {"not", "no", "never", "without"};
    lex.intensifiers = {{"very", 1.5}, {"extremely", 1.8}, {"slightly", 0.5}};
    return lex;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const std::string& tag) {
    static std::uint64_t counter = 0;
    fs::path dir = fs::temp_directory_path() /
                   ("serpaudit_test_" + tag + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string data_path(const std::string& relative) {
    return std::string(SERPAUDIT_DATA_DIR) + "/" + relative;
}

namespace {

// Word pools for generated bodies. Sentiment words overlap the reference
// lexicon so generated corpora produce non-trivial scores.
const std::vector<std::string>& neutral_words() {
    static const std::vector<std::string> w = {
        "the",    "policy",  "report", "council", "measure", "debate", "vote",
        "people", "country", "city",   "economy", "law",     "group",  "survey",
        "study",  "plan",    "change", "public",  "press",   "member"};
    return w;
}

const std::vector<std::string>& sentiment_words() {
    static const std::vector<std::string> w = {
        "good",  "bad",    "great",   "awful",   "illegal", "nice", "chaotic",
        "risk",  "support", "happy",  "sad",     "calm",    "ban",  "rights",
        "fair",  "unfair",  "strong", "weak",    "clear",   "harsh"};
    return w;
}

const std::vector<std::string>& aspect_words() {
    static const std::vector<std::string> w = {"illegal", "ban",  "risk",   "chaotic",
                                               "nice",    "rights", "support", "harsh"};
    return w;
}

const std::vector<std::string>& relations() {
    static const std::vector<std::string> w = {"nsubj", "amod", "dobj", "nmod:of",
                                               "compound"};
    return w;
}

std::string make_body(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> n_sent(2, 5);
    std::uniform_int_distribution<std::size_t> n_words(5, 10);
    std::uniform_int_distribution<std::size_t> neutral(0, neutral_words().size() - 1);
    std::uniform_int_distribution<std::size_t> senti(0, sentiment_words().size() - 1);
    std::bernoulli_distribution use_senti(0.35);
    std::ostringstream body;
    std::size_t sentences = n_sent(rng);
    for (std::size_t s = 0; s < sentences; ++s) {
        std::size_t words = n_words(rng);
        for (std::size_t w = 0; w < words; ++w) {
            std::string word =
                use_senti(rng) ? sentiment_words()[senti(rng)] : neutral_words()[neutral(rng)];
            if (w == 0) word[0] = static_cast<char>(std::toupper(word[0]));
            body << word << (w + 1 == words ? "" : " ");
        }
        body << ". ";
    }
    return body.str();
}

}  // namespace

CorpusFiles generate_corpus(const fs::path& dir, const std::vector<TopicSpec>& topics,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CorpusFiles files{dir / "documents.jsonl", dir / "topics.tsv", dir / "triples.tsv"};
    fs::create_directories(dir);

    std::ostringstream topics_out;
    topics_out << "#engine A Bing\n#engine B Google\n";
    std::ostringstream docs_out;
    std::ostringstream triples_out;
    triples_out << "# doc_id\tsentence_idx\tword\trelation\tkeyword\tword_pos\n";

    std::uniform_int_distribution<std::size_t> aspect_pick(0, aspect_words().size() - 1);
    std::uniform_int_distribution<std::size_t> rel_pick(0, relations().size() - 1);
    std::uniform_int_distribution<int> n_triples(0, 4);

    for (const auto& t : topics) {
        std::vector<std::string> queries;
        for (std::size_t q = 0; q < t.queries; ++q) {
            queries.push_back(t.topic_id + " query " + std::to_string(q + 1));
        }
        topics_out << t.topic_id << '\t' << t.title << '\t'
                   << (t.stance_sign < 0 ? "-1" : "+1") << '\t';
        for (std::size_t q = 0; q < queries.size(); ++q) {
            topics_out << queries[q] << (q + 1 == queries.size() ? "" : ",");
        }
        topics_out << '\n';

        auto keywords = serpaudit::extract_topic_keywords(t.title);
        for (const auto& query : queries) {
            for (const char* engine : {"A", "B"}) {
                for (int rank = 1; rank <= 10; ++rank) {
                    std::string doc_id = t.topic_id + "-" + engine + "-" +
                                         std::to_string(&query - queries.data() + 1) + "-" +
                                         std::to_string(rank);
                    nlohmann::json rec;
                    rec["doc_id"] = doc_id;
                    rec["engine"] = engine;
                    rec["topic_id"] = t.topic_id;
                    rec["query"] = query;
                    rec["rank"] = rank;
                    rec["title"] = t.title + " result " + std::to_string(rank);
                    rec["body"] = make_body(rng);
                    docs_out << rec.dump() << '\n';

                    int k = n_triples(rng);
                    for (int i = 0; i < k; ++i) {
                        const std::string& kw = keywords[i % keywords.size()];
                        triples_out << doc_id << '\t' << i << '\t'
                                    << aspect_words()[aspect_pick(rng)] << '\t'
                                    << relations()[rel_pick(rng)] << '\t' << kw << '\t'
                                    << (i % 2 == 0 ? "ADJ" : "NOUN") << '\n';
                    }
                }
            }
        }
    }

    write_file(files.documents, docs_out.str());
    write_file(files.topics, topics_out.str());
    write_file(files.triples, triples_out.str());
    return files;
}

std::vector<TopicSpec> paper_shape_topics() {
    // 2560 documents per engine over 15 topics.
    return {
        {"abortion", "Abortion", +1, 20},
        {"animal_testing", "Animal Testing", -1, 8},
        {"assisted_suicide", "Assisted Suicide", +1, 8},
        {"brexit", "Brexit", -1, 18},
        {"climate_change", "Climate Change", +1, 35},
        {"gay_marriage", "Gay Marriage", +1, 22},
        {"gun_control", "Gun Control", +1, 26},
        {"medical_marijuana", "Medical Marijuana", +1, 13},
        {"minimum_wage", "Minimum Wage", -1, 22},
        {"obamacare", "Obamacare", +1, 12},
        {"prostitution", "Prostitution", +1, 7},
        {"syrian_refugees", "Syrian Refugees", +1, 13},
        {"transgender_military", "Transgender Military", +1, 8},
        {"travel_ban", "Travel Ban", -1, 14},
        {"trump", "Trump", -1, 30},
    };
}

}  // namespace fixtures
