#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "serpaudit/lexicon.hpp"

namespace fixtures {

// Small in-memory lexicon for unit tests; matches the spec'd example values.
serpaudit::Lexicon tiny_lexicon();

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

struct TopicSpec {
    std::string topic_id;
    std::string title;
    int stance_sign = +1;
    std::size_t queries = 1;
};

struct CorpusFiles {
    std::filesystem::path documents;
    std::filesystem::path topics;
    std::filesystem::path triples;
};

// Paired 2-engine corpus: every topic gets `queries` queries, every query a
// full 10-document slate per engine. Bodies are seeded sentences drawn from
// a sentiment-bearing word pool; triples are emitted for the topic keywords.
CorpusFiles generate_corpus(const std::filesystem::path& dir,
                            const std::vector<TopicSpec>& topics, std::uint64_t seed);

// The 15-topic distribution used for scale checks (2560 documents/engine).
std::vector<TopicSpec> paper_shape_topics();

// Path into the versioned data/ directory of the repo.
std::string data_path(const std::string& relative);

}  // namespace fixtures
