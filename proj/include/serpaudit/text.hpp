#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace serpaudit::text {

// Lowercase (ASCII), split on whitespace, strip leading/trailing
// non-alphanumerics; internal hyphens and apostrophes survive. Codepoints
// outside ASCII are treated as letters and left untouched.
std::vector<std::string> tokenize(std::string_view s);

std::string to_lower(std::string_view s);

// Split on {. ! ?} followed by whitespace and a capital letter (or end of
// text). A '.' is not a boundary when the word before it is a known
// abbreviation (Dr., U.S., e.g., ...). Sentences are trimmed; empty ones are
// dropped, so every non-whitespace character of the input lands in exactly
// one sentence.
std::vector<std::string> split_sentences(std::string_view body);

}  // namespace serpaudit::text
