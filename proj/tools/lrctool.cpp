// Command-line front end: generate, verify, params, search, export-matrix.

#include <iostream>

#include <CLI11.hpp>

#include "lrc/commands.hpp"

namespace {

lrc::OutputFormat parse_format(const std::string& s) {
    if (s == "text") return lrc::OutputFormat::Text;
    if (s == "csv") return lrc::OutputFormat::Csv;
    if (s == "json") return lrc::OutputFormat::Json;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singleton-optimal (n,k,6;3) locally repairable codes from 4-local arcs in PG(2,q)"};
    app.require_subcommand(1);

    lrc::RunConfig cfg;
    std::string format = "json";

    auto add_field_opts = [&](CLI::App* cmd, bool q_required) {
        auto* q = cmd->add_option("--q", cfg.q, "field order (prime power)");
        if (q_required) q->required();
        cmd->add_option("--modulus", cfg.modulus,
                        "modulus coefficients, constant term first (e.g. 1,1,0,1 for 1+x+x^3)")
            ->delimiter(',');
        cmd->add_option("--primitive", cfg.primitive, "primitive element by canonical index");
    };

    auto* gen = app.add_subcommand("generate", "construct and fully verify a code for q");
    add_field_opts(gen, true);
    gen->add_option("--out", cfg.out, "output path prefix (default lrc-q<q>)");
    gen->add_option("--format", format, "text, json or csv")->capture_default_str();
    gen->add_option("--parallel", cfg.threads, "worker threads for the distance scan");

    auto* ver = app.add_subcommand("verify", "verify an arc or matrix file");
    ver->add_option("--in", cfg.in, "input file (JSON or text)")->required();
    ver->add_option("--modulus", cfg.modulus,
                    "field modulus for text inputs (text headers carry only q)")
        ->delimiter(',');
    ver->add_option("--primitive", cfg.primitive, "primitive element for text inputs");
    ver->add_option("--parallel", cfg.threads, "worker threads for the distance scan");

    auto* par = app.add_subcommand("params", "print predicted parameters and the length bound");
    par->add_option("--q", cfg.q, "field order (prime power)")->required();

    auto* sea = app.add_subcommand("search", "exhaustive search for a 4-local arc");
    add_field_opts(sea, true);
    sea->add_option("--blocks", cfg.blocks, "target number of blocks")->required();
    sea->add_option("--budget", cfg.budget, "node budget")->capture_default_str();
    sea->add_option("--out", cfg.out, "write the witness arc to this file");
    sea->add_option("--format", format, "text, json or csv")->capture_default_str();

    auto* exp = app.add_subcommand("export-matrix", "derive the parity-check matrix of an arc file");
    exp->add_option("--in", cfg.in, "input arc file")->required();
    exp->add_option("--out", cfg.out, "output file (stdout when omitted)");
    exp->add_option("--format", format, "text, json or csv")->capture_default_str();

    try {
        app.parse(argc, argv);
        cfg.format = parse_format(format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lrc::kExitUsage;
    }

    if (gen->parsed()) return lrc::cmd_generate(cfg, std::cout, std::cerr);
    if (ver->parsed()) return lrc::cmd_verify(cfg, std::cout, std::cerr);
    if (par->parsed()) return lrc::cmd_params(cfg, std::cout, std::cerr);
    if (sea->parsed()) return lrc::cmd_search(cfg, std::cout, std::cerr);
    if (exp->parsed()) return lrc::cmd_export_matrix(cfg, std::cout, std::cerr);
    return lrc::kExitUsage;
}
