#include "serpaudit/aspect.hpp"

#include <algorithm>
#include <stdexcept>

#include "serpaudit/sentiment.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit::aspect {

AspectContext filter_triples(std::span<const DependencyTriple> triples, const Topic& topic) {
    AspectContext ctx;
    ctx.keywords = topic.keywords;
    if (!triples.empty()) ctx.doc_id = triples.front().doc_id;
    for (const auto& t : triples) {
        if (t.doc_id != ctx.doc_id) {
            throw std::invalid_argument("filter_triples: triples span multiple doc_ids");
        }
        if (t.word_pos == WordPos::Other) continue;
        bool keyword_match = std::find(topic.keywords.begin(), topic.keywords.end(),
                                       t.keyword) != topic.keywords.end();
        if (!keyword_match) continue;
        ctx.related_words.push_back({t.word, t.relation, t.keyword, t.sentence_idx});
    }
    return ctx;
}

Polarity score_aspect_level(const Lexicon& lexicon, const AspectContext& context) {
    if (context.related_words.empty()) return Polarity(0.0);
    std::vector<double> values;
    values.reserve(context.related_words.size());
    for (const auto& rw : context.related_words) {
        std::vector<std::string> single{rw.word};
        values.push_back(sentiment::score_tokens(lexicon, single).value);
    }
    return Polarity(stable_mean(values));
}

}  // namespace serpaudit::aspect
