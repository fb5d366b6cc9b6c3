#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kerind/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"kerind: kernel-of-induction verification for finite group actions"};

    std::string scenario_path, command = "all", json_path, levels_arg;
    std::uint64_t cap = 0, seed = 0;
    std::uint32_t bound = 0;
    app.add_option("--scenario", scenario_path, "scenario file path")->required();
    app.add_option("--command", command,
                   "h1|kernel|oracle|verify-theorem|pic|coinvariants|all (default all)");
    app.add_option("--n", levels_arg, "comma-separated matrix levels, e.g. 1,2");
    app.add_option("--cap", cap, "coefficient-group enumeration cap");
    app.add_option("--bound", bound, "stabilization level bound");
    app.add_option("--json", json_path, "write the JSON report here");
    app.add_option("--seed", seed, "seed for randomized property samples only");
    CLI11_PARSE(app, argc, argv);

    try {
        kerind::Scenario sc = kerind::parse_scenario_file(scenario_path);
        kerind::RunOptions opt;
        opt.command = command;
        opt.seed = seed;
        if (cap) opt.cap = cap;
        if (bound) opt.bound = bound;
        if (!levels_arg.empty()) {
            std::vector<std::uint32_t> levels;
            std::istringstream ls(levels_arg);
            std::string part;
            while (std::getline(ls, part, ',')) levels.push_back(std::uint32_t(std::stoul(part)));
            opt.levels = levels;
        }
        kerind::RunReport rep = kerind::run_scenario(sc, opt);
        std::cout << kerind::report_text(rep);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << rep.json.dump(2) << "\n";
        }
        return rep.all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
