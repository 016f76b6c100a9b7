#include <CLI11.hpp>
#include <iostream>

#include "minorkit/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"classify ideals of 2-minors of 2xn matrices of linear forms"};
    app.require_subcommand(1);

    CLI::App* an = app.add_subcommand(
        "analyze", "decompose a pencil, classify height/cd/ara, and verify the witness");

    minorkit::JobConfig cfg;
    std::string file, blocks;
    long characteristic = 0;
    std::string order = "degrevlex";
    std::string output = "text";

    CLI::Option* file_opt = an->add_option("--file", file, "matrix file (vars/field headers, two rows)");
    CLI::Option* blocks_opt =
        an->add_option("--blocks", blocks, "inline block tokens, e.g. \"N(2) J(1,2) B(3)\"");
    file_opt->excludes(blocks_opt);
    blocks_opt->excludes(file_opt);

    CLI::Option* char_opt = an->add_option("--char", characteristic,
                                           "coefficient characteristic: 0 or a prime");
    an->add_flag("--verify,!--no-verify", cfg.verify,
                 "verify the witness when the ring is small enough (default on)");
    an->add_flag("--force-verify", cfg.force_verify, "verify regardless of variable count");
    an->add_option("--max-verify-vars", cfg.max_verify_vars,
                   "variable cap for automatic verification");
    an->add_option("--order", order, "monomial order")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    an->add_option("--output", output, "report format")->check(CLI::IsMember({"text", "json"}));
    an->add_option("--pair-cap", cfg.limits.pair_cap, "Groebner S-pair cap");
    an->add_option("--degree-cap", cfg.limits.degree_cap, "Groebner degree cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (file.empty() == blocks.empty()) {
        std::cerr << "error: exactly one of --file or --blocks is required\n";
        return 1;
    }
    cfg.input = file.empty() ? minorkit::JobConfig::Input::blocks
                             : minorkit::JobConfig::Input::matrix_file;
    cfg.source = file.empty() ? blocks : file;
    if (char_opt->count() > 0) cfg.characteristic = characteristic;
    cfg.order = order == "lex" ? minorkit::MonomialOrder::lex : minorkit::MonomialOrder::degrevlex;
    cfg.output = output == "json" ? minorkit::JobConfig::Output::json
                                  : minorkit::JobConfig::Output::text;
    return minorkit::run_job(cfg, std::cout, std::cerr);
}
