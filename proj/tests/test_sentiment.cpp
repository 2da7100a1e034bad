#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/sentiment.hpp"
#include "serpaudit/text.hpp"
#include "serpaudit/util.hpp"
#include "support/fixtures.hpp"

using namespace serpaudit;
using sentiment::score_document;
using sentiment::score_sentence_level;
using sentiment::score_tokens;

namespace {

Document make_doc(std::string body) {
    Document d;
    d.doc_id = "d1";
    d.topic_id = "t";
    d.query = "q";
    d.rank = 1;
    d.body = std::move(body);
    return d;
}

Lexicon negate_lexicon(const Lexicon& lex) {
    Lexicon out = lex;
    for (auto& [term, p] : out.entries) p = -p;
    return out;
}

std::string random_text(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 60);
    std::uniform_int_distribution<int> ch(32, 126);
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(ch(rng)));
    return s;
}

}  // namespace

TEST_CASE("score_tokens examples") {
    auto lex = fixtures::tiny_lexicon();
    CHECK(score_tokens(lex, std::vector<std::string>{"good"}).value ==
          doctest::Approx(0.7).epsilon(1e-15));
    // Negation: -0.5 x polarity.
    CHECK(score_tokens(lex, std::vector<std::string>{"not", "good"}).value ==
          doctest::Approx(-0.35).epsilon(1e-15));
    CHECK(score_tokens(lex, std::vector<std::string>{"the", "a", "of"}).value == 0.0);
    CHECK(score_tokens(lex, std::vector<std::string>{}).value == 0.0);
}

TEST_CASE("score_tokens negation window is three tokens") {
    auto lex = fixtures::tiny_lexicon();
    // "not" 3 tokens before "good": still flips.
    CHECK(score_tokens(lex, {std::vector<std::string>{"not", "x", "y", "good"}}).value ==
          doctest::Approx(-0.35));
    // 4 tokens before: out of the window.
    CHECK(score_tokens(lex, {std::vector<std::string>{"not", "x", "y", "z", "good"}}).value ==
          doctest::Approx(0.7));
}

TEST_CASE("score_tokens intensifier immediately before, with clamping") {
    auto lex = fixtures::tiny_lexicon();
    CHECK(score_tokens(lex, {std::vector<std::string>{"very", "good"}}).value ==
          doctest::Approx(0.7 * 1.5));
    // great(0.8) x extremely(1.8) = 1.44 -> clamped to 1.
    CHECK(score_tokens(lex, {std::vector<std::string>{"extremely", "great"}}).value == 1.0);
    // Intensifier one step removed does not fire.
    CHECK(score_tokens(lex, {std::vector<std::string>{"very", "x", "good"}}).value ==
          doctest::Approx(0.7));
    // Negation and intensifier combine: 0.7 * 1.5 * -0.5.
    CHECK(score_tokens(lex, {std::vector<std::string>{"not", "very", "good"}}).value ==
          doctest::Approx(-0.525));
}

TEST_CASE("score_document examples") {
    auto lex = fixtures::tiny_lexicon();
    // mean(0.7, 0.7, -0.7) = 0.2333...
    CHECK(score_document(lex, make_doc("good good bad")).value ==
          doctest::Approx(0.7 / 3.0));
    CHECK(score_document(lex, make_doc("nothing matches here at all")).value == 0.0);
    // Single-sentence body: document- and sentence-level agree.
    auto doc = make_doc("A good day.");
    CHECK(score_document(lex, doc).value == score_sentence_level(lex, doc).value);
}

TEST_CASE("score_sentence_level examples") {
    auto lex = fixtures::tiny_lexicon();
    // Sentences scoring +0.7 and -0.7 cancel.
    CHECK(score_sentence_level(lex, make_doc("Good stuff. Bad stuff.")).value == 0.0);
    // (+0.8, +0.2?) construct: great=0.8, rights=0.3, calm=0.3 -> mean of means.
    auto doc = make_doc("Great result. Rights matter. Calm voices.");
    CHECK(score_sentence_level(lex, doc).value ==
          doctest::Approx((0.8 + 0.3 + 0.3) / 3.0));
    CHECK(score_sentence_level(lex, make_doc("")).value == 0.0);
    // One sentence equals its own score_tokens value.
    auto one = make_doc("very good news");
    auto tokens = text::tokenize(one.body);
    CHECK(score_sentence_level(lex, one).value == score_tokens(lex, tokens).value);
}

TEST_CASE("neutral-null: no lexicon hits scores exactly zero at both levels") {
    auto lex = fixtures::tiny_lexicon();
    auto doc = make_doc("The council issued the report. Members voted on the plan.");
    CHECK(score_document(lex, doc).value == 0.0);
    CHECK(score_sentence_level(lex, doc).value == 0.0);
}

TEST_CASE("boundedness under fuzz") {
    auto lex = fixtures::tiny_lexicon();
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 2000; ++i) {
        auto doc = make_doc(random_text(rng));
        double d = score_document(lex, doc).value;
        double s = score_sentence_level(lex, doc).value;
        CHECK(d >= -1.0);
        CHECK(d <= 1.0);
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
    }
}

TEST_CASE("sign antisymmetry is exact") {
    auto lex = fixtures::tiny_lexicon();
    auto neg = negate_lexicon(lex);
    std::mt19937_64 rng(99);
    std::vector<std::string> pool = {"good", "bad",  "great", "awful", "not",  "very",
                                     "the",  "plan", "nice",  "risk",  "calm", "no"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::string body;
        int n = 1 + trial % 40;
        for (int i = 0; i < n; ++i) {
            body += pool[pick(rng)];
            body += (i % 7 == 6) ? ". " : " ";
        }
        auto doc = make_doc(body);
        CHECK(score_document(lex, doc).value == -score_document(neg, doc).value);
        CHECK(score_sentence_level(lex, doc).value ==
              -score_sentence_level(neg, doc).value);
    }
}

TEST_CASE("permutation invariance without negators/intensifiers") {
    auto lex = fixtures::tiny_lexicon();
    lex.negators.clear();
    lex.intensifiers.clear();
    std::mt19937_64 rng(4242);
    std::vector<std::string> tokens = {"good", "bad", "great", "awful", "nice",
                                       "risk", "the", "plan",  "calm",  "support"};
    for (int trial = 0; trial < 300; ++trial) {
        std::shuffle(tokens.begin(), tokens.end(), rng);
        double base = score_tokens(lex, tokens).value;
        std::shuffle(tokens.begin(), tokens.end(), rng);
        CHECK(score_tokens(lex, tokens).value == base);
    }
}

TEST_CASE("sentence-mean consistency against direct recomputation") {
    auto lex = fixtures::tiny_lexicon();
    const std::string bodies[] = {
        "Good start. Bad end. Calm middle.",
        "Very good news today! Not nice at all. The report was clear.",
        "One sentence only",
        "Great. Great. Awful.",
    };
    for (const auto& body : bodies) {
        auto doc = make_doc(body);
        auto sentences = text::split_sentences(body);
        std::vector<double> per_sentence;
        for (const auto& s : sentences) {
            auto toks = text::tokenize(s);
            per_sentence.push_back(score_tokens(lex, toks).value);
        }
        CHECK(score_sentence_level(lex, doc).value == stable_mean(per_sentence));
    }
}
