#include "serpaudit/text.hpp"

#include <cctype>
#include <unordered_set>

namespace serpaudit::text {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool is_word_char(unsigned char c) {
    // Non-ASCII bytes belong to multi-byte letters; keep them.
    return std::isalnum(c) != 0 || c >= 0x80;
}

// Stored without the trailing dot, lowercased.
const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> abbrevs = {
        "dr",   "mr",    "mrs",  "ms",   "prof", "sr",   "jr",   "st",
        "gen",  "gov",   "sen",  "rep",  "rev",  "hon",  "capt", "sgt",
        "u.s",  "u.k",   "u.n",  "e.g",  "i.e",  "etc",  "vs",   "cf",
        "inc",  "ltd",   "co",   "corp", "dept", "est",  "fig",  "no",
        "vol",  "pp",    "approx", "jan", "feb", "mar",  "apr",  "jun",
        "jul",  "aug",   "sep",  "sept", "oct",  "nov",  "dec",  "mt",
        "ave",  "blvd",  "rd"};
    return abbrevs;
}

// Word immediately before position `i` (exclusive), lowercased; scans back to
// the previous whitespace so "U.S" comes out whole.
std::string word_before(std::string_view s, std::size_t i) {
    std::size_t end = i;
    std::size_t begin = end;
    while (begin > 0 && !is_space(static_cast<unsigned char>(s[begin - 1]))) --begin;
    return to_lower(s.substr(begin, end - begin));
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t begin = i;
        while (i < s.size() && !is_space(static_cast<unsigned char>(s[i]))) ++i;
        if (begin == i) break;
        std::size_t lo = begin;
        std::size_t hi = i;
        while (lo < hi && !is_word_char(static_cast<unsigned char>(s[lo]))) ++lo;
        while (hi > lo && !is_word_char(static_cast<unsigned char>(s[hi - 1]))) --hi;
        if (lo < hi) tokens.push_back(to_lower(s.substr(lo, hi - lo)));
    }
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view body) {
    std::vector<std::string> sentences;
    auto flush = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space(static_cast<unsigned char>(body[begin]))) ++begin;
        while (end > begin && is_space(static_cast<unsigned char>(body[end - 1]))) --end;
        if (begin < end) sentences.emplace_back(body.substr(begin, end - begin));
    };

    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c != '.' && c != '!' && c != '?') continue;
        // Swallow runs of terminators ("?!", "...").
        std::size_t j = i;
        bool saw_dot = c == '.';
        while (j + 1 < body.size() &&
               (body[j + 1] == '.' || body[j + 1] == '!' || body[j + 1] == '?')) {
            ++j;
            saw_dot = saw_dot || body[j] == '.';
        }
        bool at_end = j + 1 >= body.size();
        bool boundary = at_end;
        if (!at_end && is_space(static_cast<unsigned char>(body[j + 1]))) {
            std::size_t k = j + 1;
            while (k < body.size() && is_space(static_cast<unsigned char>(body[k]))) ++k;
            boundary = k < body.size() &&
                       std::isupper(static_cast<unsigned char>(body[k])) != 0;
        }
        if (boundary && saw_dot && j == i) {
            std::string prev = word_before(body, i);
            if (!prev.empty() && prev.back() == '.') prev.pop_back();
            if (abbreviations().contains(prev)) boundary = false;
        }
        if (boundary) {
            flush(start, j + 1);
            start = j + 1;
        }
        i = j;
    }
    flush(start, body.size());
    return sentences;
}

}  // namespace serpaudit::text
