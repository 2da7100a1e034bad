#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace serpaudit {

// Sentiment score in [-1, 1]. Construction clamps.
struct Polarity {
    double value = 0.0;

    Polarity() = default;
    explicit Polarity(double v);

    friend bool operator==(const Polarity&, const Polarity&) = default;
};

struct Lexicon {
    std::unordered_map<std::string, double> entries;       // term -> polarity
    std::unordered_set<std::string> negators;
    std::unordered_map<std::string, double> intensifiers;  // term -> factor

    bool has_term(const std::string& t) const { return entries.contains(t); }
};

// Tab-separated file, one record per line:
//   WORD <tab> term <tab> polarity        (polarity in [-1,1])
//   NEGATOR <tab> term
//   INTENSIFIER <tab> term <tab> factor   (factor in (0,4])
// Blank lines and lines starting with '#' are skipped. Terms are lowercased.
// The three record classes must be disjoint.
Lexicon load_lexicon(const std::string& path);

}  // namespace serpaudit
