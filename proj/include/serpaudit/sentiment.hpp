#pragma once

#include <span>
#include <string>

#include "serpaudit/lexicon.hpp"

namespace serpaudit {

struct Document;

namespace sentiment {

// Mean polarity over lexicon-matched tokens, 0.0 if nothing matches.
// A negator within the 3 tokens before a match flips and halves its polarity
// (x -0.5); an intensifier immediately before a match scales it by its
// factor. Each adjusted value is clamped to [-1,1] before averaging.
// Tokens must already be lowercased.
Polarity score_tokens(const Lexicon& lexicon, std::span<const std::string> tokens);

// score_tokens over the whole-body token stream.
Polarity score_document(const Lexicon& lexicon, const Document& doc);

// Mean of per-sentence score_tokens values; 0.0 for an empty body.
Polarity score_sentence_level(const Lexicon& lexicon, const Document& doc);

}  // namespace sentiment
}  // namespace serpaudit
