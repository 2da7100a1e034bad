#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "serpaudit/corpus.hpp"
#include "serpaudit/metrics.hpp"
#include "serpaudit/report.hpp"

namespace serpaudit::audit {

struct RunConfig {
    std::string documents_path;
    std::string topics_path;
    std::optional<std::string> triples_path;
    std::string lexicon_path;
    std::string output_dir;
    std::vector<metrics::Level> levels = {metrics::Level::Doc, metrics::Level::Sent,
                                          metrics::Level::Aspect};
    metrics::GainForm gain = metrics::GainForm::Linear;
    double alpha = 0.05;
    long seed = 0;
    unsigned threads = 0;  // 0 = AUDIT_THREADS / hardware default

    // Canonical serialization; its SHA-256 is the config checksum recorded in
    // the report bundle.
    std::string canonical() const;
    std::string checksum() const;

    // Throws ConfigError on violated invariants (aspect level without a
    // triples file, alpha outside (0,1), missing required paths).
    void validate() const;
};

// Declarative JSON config file; unknown keys are rejected.
RunConfig load_config(const std::string& path);

metrics::Level parse_level(const std::string& s);           // "doc"|"sent"|"aspect"
std::vector<metrics::Level> parse_levels(const std::string& csv);
metrics::GainForm parse_gain(const std::string& s);         // "linear"|"exp"

struct ValidationSummary {
    std::size_t documents_a = 0;
    std::size_t documents_b = 0;
    std::size_t topics = 0;
    std::size_t queries = 0;  // per engine
};

// Loads and validates the corpus; throws on any violation.
ValidationSummary run_validate(const RunConfig& config, std::ostream& out);

// The full pipeline: score -> aggregate -> test -> report; writes the bundle
// under config.output_dir and prints table summaries.
report::ReportBundle run_audit(const RunConfig& config, std::ostream& out);

// Per-level polarity breakdown for one document (raw + transformed and the
// retained aspect words).
void run_score(const RunConfig& config, const std::string& doc_id, std::ostream& out);

}  // namespace serpaudit::audit
