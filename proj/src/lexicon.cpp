#include "serpaudit/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <vector>

#include "serpaudit/errors.hpp"
#include "serpaudit/text.hpp"
#include "serpaudit/util.hpp"

namespace serpaudit {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

double parse_double(const std::string& file, std::size_t lineno, const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ParseError(file, lineno, "invalid number '" + s + "'");
    }
    return v;
}

}  // namespace

Polarity::Polarity(double v) : value(clamp_unit(v)) {}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open lexicon file: " + path);

    Lexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        const std::string& kind = fields[0];
        if (fields.size() < 2 || fields[1].empty()) {
            throw ParseError(path, lineno, "missing term");
        }
        std::string term = text::to_lower(fields[1]);
        if (kind == "WORD") {
            if (fields.size() < 3) throw ParseError(path, lineno, "WORD needs a polarity");
            double p = parse_double(path, lineno, fields[2]);
            if (p < -1.0 || p > 1.0) {
                throw ParseError(path, lineno, "polarity out of [-1,1] for '" + term + "'");
            }
            lex.entries[term] = p;
        } else if (kind == "NEGATOR") {
            lex.negators.insert(term);
        } else if (kind == "INTENSIFIER") {
            if (fields.size() < 3) throw ParseError(path, lineno, "INTENSIFIER needs a factor");
            double f = parse_double(path, lineno, fields[2]);
            if (!(f > 0.0) || f > 4.0) {
                throw ParseError(path, lineno, "factor out of (0,4] for '" + term + "'");
            }
            lex.intensifiers[term] = f;
        } else {
            throw ParseError(path, lineno, "unknown record type '" + kind + "'");
        }
    }

    for (const auto& [term, _] : lex.entries) {
        if (lex.negators.contains(term) || lex.intensifiers.contains(term)) {
            throw ValidationError("lexicon term '" + term +
                                  "' appears in more than one record class");
        }
    }
    for (const auto& n : lex.negators) {
        if (lex.intensifiers.contains(n)) {
            throw ValidationError("lexicon term '" + n +
                                  "' appears in more than one record class");
        }
    }
    return lex;
}

}  // namespace serpaudit
