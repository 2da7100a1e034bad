#include "serpaudit/sentiment.hpp"

#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/text.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit::sentiment {

namespace {
constexpr std::size_t kNegationWindow = 3;
constexpr double kNegationFactor = -0.5;
}  // namespace

Polarity score_tokens(const Lexicon& lexicon, std::span<const std::string> tokens) {
    std::vector<double> matched;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto it = lexicon.entries.find(tokens[i]);
        if (it == lexicon.entries.end()) continue;
        double p = it->second;
        if (i > 0) {
            auto boost = lexicon.intensifiers.find(tokens[i - 1]);
            if (boost != lexicon.intensifiers.end()) p *= boost->second;
        }
        std::size_t window_begin = i > kNegationWindow ? i - kNegationWindow : 0;
        for (std::size_t j = window_begin; j < i; ++j) {
            if (lexicon.negators.contains(tokens[j])) {
                p *= kNegationFactor;
                break;
            }
        }
        matched.push_back(clamp_unit(p));
    }
    if (matched.empty()) return Polarity(0.0);
    return Polarity(stable_mean(matched));
}

Polarity score_document(const Lexicon& lexicon, const Document& doc) {
    auto tokens = text::tokenize(doc.body);
    return score_tokens(lexicon, tokens);
}

Polarity score_sentence_level(const Lexicon& lexicon, const Document& doc) {
    auto sentences = text::split_sentences(doc.body);
    if (sentences.empty()) return Polarity(0.0);
    std::vector<double> per_sentence;
    per_sentence.reserve(sentences.size());
    for (const auto& s : sentences) {
        auto tokens = text::tokenize(s);
        per_sentence.push_back(score_tokens(lexicon, tokens).value);
    }
    return Polarity(stable_mean(per_sentence));
}

}  // namespace serpaudit::sentiment
