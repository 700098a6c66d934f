#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xtalk/runner.hpp"

using namespace xtalk;

int main(int argc, char** argv) {
    CLI::App app{"xtalk: crosstalk-aware frequency scheduling for tunable superconducting devices"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* lvl = std::getenv("XTALK_LOG")) cfg.log_level = std::atoi(lvl);

    std::vector<std::string> strategy_names;
    std::string decomp = "hybrid";
    std::string mode = "transition";
    std::string schedule_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--device", cfg.device_path, "device config file (JSON)");
        sub->add_option("--circuit", cfg.circuits,
                        "circuit file or generator spec (bv:16, ising:9:4, qaoa:16:2, xeb:16:8)");
        sub->add_option("--strategy", strategy_names, "strategies: N, G, U, S, ColorDynamic")
            ->delimiter(',');
        sub->add_option("--distance", cfg.distance, "crosstalk graph distance d");
        sub->add_option("--max-colors", cfg.max_colors, "tunability cap(s); 0 = unlimited")
            ->delimiter(',');
        sub->add_option("--decomp", decomp, "decomposition: cz | iswap | hybrid");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "seed for devices and generators");
        sub->add_option("--crosstalk-mode", mode, "transition | literal");
        sub->add_option("--residual-coupling", cfg.residual_coupling,
                        "GHz, coupler leakage for strategy G");
        sub->add_flag("--stable-output", cfg.stable_output,
                      "write compile_ms as 0 so metrics.csv is byte-reproducible");
    };

    CLI::App* c_compile = app.add_subcommand("compile", "compile circuits and emit schedules");
    add_common(c_compile);
    CLI::App* c_compare = app.add_subcommand("compare", "compare strategies, success ratios");
    add_common(c_compare);
    CLI::App* c_bench = app.add_subcommand("bench", "canned suite at n in {4,9,16,25}");
    add_common(c_bench);
    CLI::App* c_validate = app.add_subcommand("validate", "re-check an emitted schedule file");
    add_common(c_validate);
    c_validate->add_option("schedule", schedule_path, "schedule JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& s : strategy_names) cfg.strategies.push_back(strategy_from_name(s));
        if (decomp == "cz") cfg.decomp = DecompStrategy::cz_only;
        else if (decomp == "iswap") cfg.decomp = DecompStrategy::iswap_only;
        else if (decomp == "hybrid") cfg.decomp = DecompStrategy::hybrid;
        else throw std::invalid_argument("unknown decomposition strategy: " + decomp);
        if (mode == "transition") cfg.crosstalk_mode = CrosstalkMode::transition;
        else if (mode == "literal") cfg.crosstalk_mode = CrosstalkMode::paper_literal;
        else throw std::invalid_argument("unknown crosstalk mode: " + mode);
    } catch (const std::exception& e) {
        std::cerr << "xtalk: " << e.what() << "\n";
        return 2;
    }

    if (c_compile->parsed()) return cmd_compile(cfg);
    if (c_compare->parsed()) return cmd_compare(cfg);
    if (c_bench->parsed()) return cmd_bench(cfg);
    if (c_validate->parsed()) return cmd_validate(cfg, schedule_path);
    return 2;
}
