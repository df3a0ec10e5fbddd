// qspread: signless Laplacian spread tables and checks.
//
//   qspread table rand:n=40,m=634,seed=1 star:4 --format=csv
//   qspread validate
//   qspread trace complete:5 --iters=10
//   qspread spectrum cycle:6 --matrix=l
//   qspread invariants kbip:3,4

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qspread/report.hpp"
#include "qspread/spectrum.hpp"

namespace {

struct Options {
    std::vector<std::string> sources;
    std::string bounds;
    int oracle_limit = -1;
    int iterations = 10;
    double step = 0.1;
    std::string step_mode = "constant";
    std::string format = "text";
    std::uint64_t seed = 1;
    int precision = 2;
    std::string matrix = "q";
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

qspread::RunConfig make_config(const Options& o) {
    qspread::RunConfig cfg;
    cfg.sources = o.sources;
    cfg.bounds = split_list(o.bounds);
    if (o.oracle_limit >= 0) {
        cfg.limits = qspread::OracleLimits::uniform(o.oracle_limit);
    } else if (auto env = qspread::oracle_limit_from_env()) {
        cfg.limits = qspread::OracleLimits::uniform(*env);
    }
    cfg.search.iterations = o.iterations;
    cfg.search.step = o.step;
    cfg.search.step_mode =
        o.step_mode == "decreasing" ? qspread::StepMode::decreasing : qspread::StepMode::constant;
    cfg.format = o.format == "csv" ? qspread::OutputFormat::csv : qspread::OutputFormat::text;
    cfg.seed = o.seed;
    cfg.precision = o.precision;
    return cfg;
}

void add_common(CLI::App* cmd, Options& o, bool many_sources) {
    if (many_sources) {
        cmd->add_option("sources", o.sources, "graph sources (path:5, kbip:3,3, rand:n=..,m=..,seed=.., file:PATH)");
    } else {
        cmd->add_option("source", o.sources, "graph source")->required()->expected(1);
    }
    cmd->add_option("--bounds", o.bounds, "comma list of bound names, or all");
    cmd->add_option("--oracle-limit", o.oracle_limit, "largest order handed to the exact oracles")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--iters", o.iterations, "gradient search iterations");
    cmd->add_option("--step", o.step, "gradient search step length");
    cmd->add_option("--step-mode", o.step_mode, "constant or decreasing")
        ->check(CLI::IsMember({"constant", "decreasing"}));
    cmd->add_option("--format", o.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
    cmd->add_option("--seed", o.seed, "default seed for random graph sources");
    cmd->add_option("--precision", o.precision, "decimals in text output");
}

int run_table(const Options& o) {
    const auto result = qspread::run_table(make_config(o));
    std::fputs(result.rendered.c_str(), stdout);
    if (result.has_violation) {
        std::fprintf(stderr, "bound violations found\n");
        return 1;
    }
    return 0;
}

int run_validate(const Options& o) {
    const auto report = qspread::run_validate(make_config(o));
    std::fputs(report.rendered.c_str(), stdout);
    return report.ok() ? 0 : 1;
}

int run_trace(const Options& o) {
    const auto result = qspread::run_trace(o.sources.front(), make_config(o));
    std::fputs(result.rendered.c_str(), stdout);
    return 0;
}

int run_spectrum(const Options& o) {
    const auto source = qspread::parse_graph_spec(o.sources.front(), o.seed);
    qspread::SymmetricMatrix w = o.matrix == "a"   ? qspread::adjacency_matrix(source.graph)
                                 : o.matrix == "l" ? qspread::laplacian_matrix(source.graph)
                                                   : qspread::signless_laplacian_matrix(source.graph);
    std::fputs(qspread::write_spectrum(qspread::eigenvalues(w)).c_str(), stdout);
    return 0;
}

int run_invariants(const Options& o) {
    const auto source = qspread::parse_graph_spec(o.sources.front(), o.seed);
    std::fputs(qspread::render_invariants(source, make_config(o).limits).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signless Laplacian spread: exact values, bound tables and checks"};
    app.require_subcommand(1);
    Options o;

    auto* table = app.add_subcommand("table", "bound comparison table");
    add_common(table, o, true);
    auto* validate = app.add_subcommand("validate", "run the validation suite");
    add_common(validate, o, true);
    auto* trace = app.add_subcommand("trace", "gradient search trace for one graph");
    add_common(trace, o, false);
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, largest first");
    add_common(spectrum, o, false);
    spectrum->add_option("--matrix", o.matrix, "q, l or a")->check(CLI::IsMember({"q", "l", "a"}));
    auto* invariants = app.add_subcommand("invariants", "degree and combinatorial invariants");
    add_common(invariants, o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return run_table(o);
        if (validate->parsed()) return run_validate(o);
        if (trace->parsed()) return run_trace(o);
        if (spectrum->parsed()) return run_spectrum(o);
        return run_invariants(o);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "qspread: %s\n", err.what());
        return 2;
    }
}
