#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "serpaudit/corpus.hpp"
#include "serpaudit/errors.hpp"
#include "support/fixtures.hpp"

using namespace serpaudit;

namespace {

// Minimal well-formed corpus: 2 engines x 1 query x 10 docs.
std::string minimal_docs(const std::string& query = "abortion law",
                         const std::string& topic = "abortion") {
    std::ostringstream out;
    for (const char* engine : {"A", "B"}) {
        for (int rank = 1; rank <= 10; ++rank) {
            out << "{\"doc_id\":\"" << engine << rank << "\",\"engine\":\"" << engine
                << "\",\"topic_id\":\"" << topic << "\",\"query\":\"" << query
                << "\",\"rank\":" << rank << ",\"title\":\"t\",\"body\":\"Some text.\"}\n";
        }
    }
    return out.str();
}

const std::string kMinimalTopics = "abortion\tAbortion\t+1\tabortion law\n";

}  // namespace

TEST_CASE("load_corpus accepts a minimal well-formed dump") {
    auto dir = fixtures::temp_dir("corpus_min");
    fixtures::write_file(dir / "docs.jsonl", minimal_docs());
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    Corpus c = load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
    CHECK(c.documents().size() == 20);
    CHECK(c.slates().size() == 2);
    CHECK(c.topics().size() == 1);
    const auto& slate = c.slate(Engine::A, "abortion law");
    for (int r = 1; r <= 10; ++r) CHECK(slate.docs[r - 1]->rank == r);
}

TEST_CASE("duplicate rank names the query") {
    auto dir = fixtures::temp_dir("corpus_dup");
    std::string docs = minimal_docs();
    // Turn engine A rank 4 into a second rank 3.
    auto pos = docs.find("\"rank\":4");
    docs.replace(pos, 8, "\"rank\":3");
    fixtures::write_file(dir / "docs.jsonl", docs);
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    try {
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("abortion law") != std::string::npos);
        CHECK(std::string(e.what()).find("rank 3") != std::string::npos);
    }
}

TEST_CASE("missing rank detected") {
    auto dir = fixtures::temp_dir("corpus_gap");
    std::string docs;
    std::istringstream in(minimal_docs());
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("\"doc_id\":\"A7\"") == std::string::npos) docs += line + "\n";
    }
    fixtures::write_file(dir / "docs.jsonl", docs);
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ValidationError);
}

TEST_CASE("unpaired query fails validation and names it") {
    auto dir = fixtures::temp_dir("corpus_pair");
    std::string docs = minimal_docs();
    // Engine B gets a different registered query.
    std::string other = minimal_docs("abortion debate");
    std::istringstream in(other);
    std::string line;
    std::string replaced;
    std::istringstream base(docs);
    while (std::getline(base, line)) {
        if (line.find("\"engine\":\"A\"") != std::string::npos) replaced += line + "\n";
    }
    while (std::getline(in, line)) {
        if (line.find("\"engine\":\"B\"") != std::string::npos) replaced += line + "\n";
    }
    fixtures::write_file(dir / "docs.jsonl", replaced);
    fixtures::write_file(dir / "topics.tsv",
                         "abortion\tAbortion\t+1\tabortion law,abortion debate\n");
    try {
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        std::string what = e.what();
        CHECK(what.find("abortion") != std::string::npos);
        CHECK(what.find("missing") != std::string::npos);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto dir = fixtures::temp_dir("corpus_parse");
    std::string docs = minimal_docs();
    docs += "this is not json\n";
    fixtures::write_file(dir / "docs.jsonl", docs);
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    try {
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 21);
    }
}

TEST_CASE("unknown topic and unregistered query are rejected") {
    auto dir = fixtures::temp_dir("corpus_unknown");
    fixtures::write_file(dir / "docs.jsonl", minimal_docs());
    fixtures::write_file(dir / "topics.tsv", "brexit\tBrexit\t-1\tbrexit deal\n");
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ValidationError);

    fixtures::write_file(dir / "topics.tsv", "abortion\tAbortion\t+1\tother query\n");
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ValidationError);
}

TEST_CASE("rank outside 1..10 and empty body are parse-time failures") {
    auto dir = fixtures::temp_dir("corpus_fields");
    std::string bad_rank = minimal_docs();
    auto pos = bad_rank.find("\"rank\":10");
    bad_rank.replace(pos, 9, "\"rank\":11");
    fixtures::write_file(dir / "docs.jsonl", bad_rank);
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ParseError);

    std::string empty_body = minimal_docs();
    pos = empty_body.find("Some text.");
    empty_body.replace(pos, 10, "   ");
    fixtures::write_file(dir / "docs.jsonl", empty_body);
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ParseError);
}

TEST_CASE("triples: unknown doc rejected, known docs indexed") {
    auto dir = fixtures::temp_dir("corpus_triples");
    fixtures::write_file(dir / "docs.jsonl", minimal_docs());
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    fixtures::write_file(dir / "triples.tsv",
                         "# comment\nA1\t0\tillegal\tnsubj\tabortion\tADJ\n");
    Corpus c = load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string(),
                           (dir / "triples.tsv").string());
    CHECK(c.triples_for("A1").size() == 1);
    CHECK(c.triples_for("A2").empty());

    fixtures::write_file(dir / "triples.tsv", "ghost\t0\tillegal\tnsubj\tabortion\tADJ\n");
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string(),
                    (dir / "triples.tsv").string()),
        ValidationError);
}

TEST_CASE("round-trip: save then reload yields identical documents") {
    auto dir = fixtures::temp_dir("corpus_roundtrip");
    auto files = fixtures::generate_corpus(
        dir, {{"abortion", "Abortion", +1, 2}, {"brexit", "Brexit", -1, 1}}, 7);
    Corpus c1 = load_corpus(files.documents.string(), files.topics.string());
    save_documents(c1, (dir / "resaved.jsonl").string());
    Corpus c2 = load_corpus((dir / "resaved.jsonl").string(), files.topics.string());
    REQUIRE(c1.documents().size() == c2.documents().size());
    for (const auto& [key, doc] : c1.documents()) {
        auto it = c2.documents().find(key);
        REQUIRE(it != c2.documents().end());
        CHECK(doc == it->second);
    }
    // And the serialization itself is stable.
    save_documents(c2, (dir / "resaved2.jsonl").string());
    CHECK(fixtures::read_file(dir / "resaved.jsonl") ==
          fixtures::read_file(dir / "resaved2.jsonl"));
}

TEST_CASE("topic_distribution sums to document counts") {
    auto dir = fixtures::temp_dir("corpus_dist");
    auto files = fixtures::generate_corpus(dir,
                                           {{"abortion", "Abortion", +1, 20},
                                            {"brexit", "Brexit", -1, 3},
                                            {"gay_marriage", "Gay Marriage", +1, 1}},
                                           11);
    Corpus c = load_corpus(files.documents.string(), files.topics.string());
    auto rows = topic_distribution(c);
    REQUIRE(rows.size() == 3);
    // Lexicographic ordering.
    CHECK(rows[0].topic_id == "abortion");
    CHECK(rows[1].topic_id == "brexit");
    CHECK(rows[2].topic_id == "gay_marriage");
    // abortion: 20 queries x 10 docs = 200 per engine.
    CHECK(rows[0].docs_a == 200);
    CHECK(rows[0].docs_b == 200);
    std::size_t total_a = 0, total_b = 0;
    for (const auto& r : rows) {
        total_a += r.docs_a;
        total_b += r.docs_b;
    }
    CHECK(total_a == c.document_count(Engine::A));
    CHECK(total_b == c.document_count(Engine::B));
}

TEST_CASE("empty corpus distribution is empty") {
    auto dir = fixtures::temp_dir("corpus_empty");
    fixtures::write_file(dir / "docs.jsonl", "");
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    Corpus c = load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
    CHECK(topic_distribution(c).empty());
}

TEST_CASE("extract_topic_keywords") {
    CHECK(extract_topic_keywords("abortion") == std::vector<std::string>{"abortion"});
    CHECK(extract_topic_keywords("gay marriage") ==
          std::vector<std::string>{"gay", "marriage"});
    CHECK(extract_topic_keywords("  Travel   Ban ") ==
          std::vector<std::string>{"travel", "ban"});
    CHECK_THROWS_AS(extract_topic_keywords("   "), EmptyTitle);
}

TEST_CASE("engine display names come from topics file directives") {
    auto dir = fixtures::temp_dir("corpus_names");
    fixtures::write_file(dir / "topics.tsv",
                         "#engine A Bing\n#engine B Google\n" + kMinimalTopics);
    auto tf = load_topics((dir / "topics.tsv").string());
    CHECK(tf.engine_names.a == "Bing");
    CHECK(tf.engine_names.b == "Google");
    CHECK(tf.topics.size() == 1);
    CHECK(tf.topics[0].keywords == std::vector<std::string>{"abortion"});
    CHECK(tf.topics[0].stance_sign == +1);
}

TEST_CASE("duplicate doc_id within an engine rejected, across engines allowed") {
    auto dir = fixtures::temp_dir("corpus_docid");
    std::string docs = minimal_docs();
    // Rename B-side ids to match A-side ones: allowed.
    std::string shared;
    std::istringstream in(docs);
    std::string line;
    int b_rank = 0;
    while (std::getline(in, line)) {
        auto pos = line.find("\"doc_id\":\"B");
        if (pos != std::string::npos) {
            ++b_rank;
            line.replace(pos, std::string("\"doc_id\":\"B").size(), "\"doc_id\":\"A");
        }
        shared += line + "\n";
    }
    fixtures::write_file(dir / "docs.jsonl", shared);
    fixtures::write_file(dir / "topics.tsv", kMinimalTopics);
    Corpus c = load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string());
    CHECK(c.find_documents("A1").size() == 2);

    // Same doc_id twice within one engine: rejected.
    std::string dup = minimal_docs();
    auto pos = dup.find("\"doc_id\":\"A2\"");
    dup.replace(pos, std::string("\"doc_id\":\"A2\"").size(), "\"doc_id\":\"A1\"");
    fixtures::write_file(dir / "docs.jsonl", dup);
    CHECK_THROWS_AS(
        load_corpus((dir / "docs.jsonl").string(), (dir / "topics.tsv").string()),
        ValidationError);
}
