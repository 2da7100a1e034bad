#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "serpaudit/audit.hpp"
#include "serpaudit/errors.hpp"

namespace {

using serpaudit::audit::RunConfig;

// Flag overrides beat the config file.
struct CliOptions {
    std::string config_path;
    std::string docs, topics, triples, lexicon, out, levels, gain;
    double alpha = -1.0;
    long seed = -1;
    bool seed_set = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "declarative JSON config file");
    cmd->add_option("--docs", opt.docs, "documents file (JSON lines)");
    cmd->add_option("--topics", opt.topics, "topics registry file");
    cmd->add_option("--triples", opt.triples, "dependency triples file");
    cmd->add_option("--lexicon", opt.lexicon, "sentiment lexicon file");
    cmd->add_option("--out", opt.out, "output directory");
    cmd->add_option("--levels", opt.levels, "levels to run: doc,sent,aspect");
    cmd->add_option("--gain", opt.gain, "NDCG gain form: linear|exp");
    cmd->add_option("--alpha", opt.alpha, "significance level (default 0.05)");
    cmd->add_option("--seed", opt.seed, "seed recorded in the run config")
        ->each([&](const std::string&) { opt.seed_set = true; });
}

RunConfig build_config(const CliOptions& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = serpaudit::audit::load_config(opt.config_path);
    if (!opt.docs.empty()) cfg.documents_path = opt.docs;
    if (!opt.topics.empty()) cfg.topics_path = opt.topics;
    if (!opt.triples.empty()) cfg.triples_path = opt.triples;
    if (!opt.lexicon.empty()) cfg.lexicon_path = opt.lexicon;
    if (!opt.out.empty()) cfg.output_dir = opt.out;
    if (!opt.levels.empty()) cfg.levels = serpaudit::audit::parse_levels(opt.levels);
    if (!opt.gain.empty()) cfg.gain = serpaudit::audit::parse_gain(opt.gain);
    if (opt.alpha >= 0.0) cfg.alpha = opt.alpha;
    if (opt.seed_set) cfg.seed = opt.seed;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Audits two search engines' ranked results for sentiment bias"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string doc_id;

    CLI::App* validate = app.add_subcommand("validate", "load and validate the corpus");
    add_common_flags(validate, opt);

    CLI::App* audit = app.add_subcommand("audit", "run the full audit pipeline");
    add_common_flags(audit, opt);

    CLI::App* score = app.add_subcommand("score", "print per-level scores for one document");
    add_common_flags(score, opt);
    score->add_option("doc_id", doc_id, "document to score")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = build_config(opt);
        if (validate->parsed()) {
            serpaudit::audit::run_validate(cfg, std::cout);
        } else if (audit->parsed()) {
            if (cfg.output_dir.empty()) throw serpaudit::ConfigError("--out is required");
            serpaudit::audit::run_audit(cfg, std::cout);
        } else if (score->parsed()) {
            serpaudit::audit::run_score(cfg, doc_id, std::cout);
        }
    } catch (const serpaudit::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
