#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uur/acceptance.hpp"
#include "uur/scenario.hpp"

namespace {

int run_command(const std::string& name, const std::string& file_path,
                const std::string& grid_text, const std::string& out_path,
                const std::string& format, std::uint64_t seed) {
    if (name.empty() == file_path.empty()) {
        std::cerr << "run: give exactly one of a catalog name or --file\n";
        return 2;
    }
    uur::Scenario scenario =
        file_path.empty() ? uur::find_scenario(name) : uur::load_scenario_file(file_path);
    if (!grid_text.empty()) {
        scenario.grid = uur::parse_grid(grid_text);
        uur::validate_scenario(scenario);
    }

    const std::vector<uur::CurvePoint> points = uur::run_scenario(scenario, seed);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "run: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (format == "json") {
        uur::write_json(points, os);
    } else {
        uur::write_csv(points, os);
    }
    return 0;
}

int check_command(const std::string& report_path, std::uint64_t seed) {
    const std::vector<uur::CriterionResult> results = uur::run_acceptance(seed);
    uur::print_acceptance(results, std::cout);
    if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) {
            std::cerr << "check: cannot open '" << report_path << "' for writing\n";
            return 2;
        }
        uur::write_acceptance_report(results, file);
    }
    const bool ok = uur::all_passed(results);
    std::cout << (ok ? "all criteria passed\n" : "ACCEPTANCE FAILURES PRESENT\n");
    return ok ? 0 : 1;
}

int list_command() {
    for (const uur::Scenario& s : uur::scenario_catalog()) {
        std::cout << s.name << "\n    " << s.description << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variance bounds for unitary operators: curve runs and acceptance checks"};
    app.require_subcommand(1);

    std::uint64_t seed = uur::default_search_seed;
    app.add_option("--seed", seed, "seed for the permutation-search heuristics");

    CLI::App* list_cmd = app.add_subcommand("list", "list the scenario catalog");

    std::string name;
    std::string file_path;
    std::string grid_text;
    std::string out_path;
    std::string format = "csv";
    CLI::App* run_cmd = app.add_subcommand("run", "evaluate a scenario over its theta grid");
    run_cmd->add_option("name", name, "catalog scenario name (see the list command)");
    run_cmd->add_option("--file", file_path, "JSON scenario file instead of a catalog name")
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--grid", grid_text, "override the theta grid, start:stop:count");
    run_cmd->add_option("--out", out_path, "write the curve here instead of stdout");
    run_cmd->add_option("--format", format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string report_path;
    CLI::App* check_cmd = app.add_subcommand("check", "run the acceptance battery");
    check_cmd->add_option("--report", report_path, "also write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list_cmd) return list_command();
        if (*run_cmd) return run_command(name, file_path, grid_text, out_path, format, seed);
        if (*check_cmd) return check_command(report_path, seed);
    } catch (const uur::ScenarioError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
