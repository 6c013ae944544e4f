#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "homrine/cli.hpp"

namespace homrine::cli {

/// Full command-line front end; also driven in-process by the test suites.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure analysis of split regular Hom-Lie Rinehart algebras"};
    app.require_subcommand(1);

    Options opt;
    std::string file, file_b, out_path, corpus_id;
    std::size_t orbit_bound = 0, chain_budget = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--orbit-bound", orbit_bound,
                        "twist-orbit closure bound (default from file, else 64)");
        sub->add_option("--chain-budget", chain_budget,
                        "brute-force family length budget (default from file, else 4)");
        sub->add_option("--json", opt.json_out,
                        "write the machine report to this path ('-' for stdout)");
        sub->add_flag("--quiet", opt.quiet, "suppress the human summary");
    };

    struct StageCmd {
        const char* name;
        const char* help;
        Stage stage;
    };
    const StageCmd stage_cmds[] = {
        {"validate", "check every defining axiom", Stage::Validate},
        {"split", "compute the root and weight space decomposition", Stage::Split},
        {"connect", "compute connection classes of roots and weights", Stage::Connect},
        {"ideals", "build and verify the class ideals and the reconstructions", Stage::Ideals},
        {"structure", "tightness, simplicity, simple components, pairing", Stage::Structure},
    };
    std::vector<std::pair<CLI::App*, Stage>> stage_subs;
    for (const auto& sc : stage_cmds) {
        CLI::App* sub = app.add_subcommand(sc.name, sc.help);
        sub->add_option("file", file, "algebra file (JSON)")->required();
        add_common(sub);
        stage_subs.emplace_back(sub, sc.stage);
    }

    CLI::App* report = app.add_subcommand("report", "run the full pipeline and write a report");
    report->add_option("file", file, "algebra file (JSON)")->required();
    report->add_option("out", out_path, "report destination ('-' for stdout)");
    add_common(report);

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "export a built-in example algebra");
    corpus_cmd->add_option("id", corpus_id, "entry id (E1..E8, M1..M6)")->required();
    corpus_cmd->add_option("out", out_path, "destination ('-' for stdout)");

    CLI::App* dsum = app.add_subcommand("direct-sum", "block direct sum of two algebra files");
    dsum->add_option("a", file, "first algebra file")->required();
    dsum->add_option("b", file_b, "second algebra file")->required();
    dsum->add_option("out", out_path, "destination ('-' for stdout)")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    if (orbit_bound > 0) opt.orbit_bound = orbit_bound;
    if (chain_budget > 0) opt.chain_budget = chain_budget;

    try {
        for (const auto& [sub, stage] : stage_subs)
            if (sub->parsed())
                return run_stage_command(file, stage, opt, std::nullopt, out, err);
        if (report->parsed()) {
            std::optional<std::string> dest =
                out_path.empty() ? std::optional<std::string>("-") : out_path;
            return run_stage_command(file, Stage::Report, opt, dest, out, err);
        }
        if (corpus_cmd->parsed()) {
            std::optional<std::string> dest =
                out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
            return run_corpus_command(corpus_id, dest, out, err);
        }
        if (dsum->parsed()) return run_direct_sum_command(file, file_b, out_path, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kInputError;
    }
    err << "no command\n";
    return kInputError;
}

}  // namespace homrine::cli
