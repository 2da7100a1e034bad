#pragma once

#include <span>
#include <string>
#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/lexicon.hpp"

namespace serpaudit::aspect {

struct RelatedWord {
    std::string word;
    std::string relation;
    std::string keyword;
    int sentence_idx = 0;

    friend bool operator==(const RelatedWord&, const RelatedWord&) = default;
};

// Words grammatically tied to a topic's keywords in one document.
struct AspectContext {
    std::string doc_id;
    std::vector<std::string> keywords;
    std::vector<RelatedWord> related_words;
};

// Keeps triples whose keyword is one of the topic's keywords and whose word
// is a content class (noun/verb/adjective/adverb). Duplicates are kept; each
// occurrence counts. All triples must belong to a single doc_id.
AspectContext filter_triples(std::span<const DependencyTriple> triples, const Topic& topic);

// Mean of score_tokens([word]) over every related word occurrence
// (words without a lexicon entry contribute 0); 0.0 with no related words.
Polarity score_aspect_level(const Lexicon& lexicon, const AspectContext& context);

}  // namespace serpaudit::aspect
