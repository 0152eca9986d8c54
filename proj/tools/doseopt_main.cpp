// doseopt: end-of-trial dose decisions, scenario simulation and the
// reproduction tables.
//
// Exit codes: 0 every requested method selected a dose; 3 some method
// selected none; 2 usage or schema error; 1 anything else.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "doseopt/document.hpp"
#include "doseopt/presets.hpp"
#include "doseopt/report.hpp"

namespace fs = std::filesystem;
using namespace doseopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoDose = 3;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << seed << " (pass --seed " << seed << " to reproduce)\n";
    return seed;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct DecideArgs {
    std::string input;
    std::string method = "all";
    std::optional<std::string> strategy;
    std::optional<std::string> record;
    bool json_stdout = false;
};

int cmd_decide(const DecideArgs& a) {
    const TrialInputDocument doc = load_trial_input(a.input);
    const Strategy strategy = a.strategy ? parse_strategy(*a.strategy) : doc.decision.strategy;
    const DecisionReport rep = run_decide(doc, requested_methods(doc, a.method), strategy);
    const std::string record = to_json(rep).dump(2) + "\n";
    if (a.record) write_file(*a.record, record);
    std::cout << (a.json_stdout ? record : render_trace(rep));
    return rep.all_selected() ? kExitOk : kExitNoDose;
}

struct SimulateArgs {
    std::string suite;
    std::optional<std::uint64_t> seed;
    int reps = 0;
    int workers = 1;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
    const ScenarioSuiteDocument suite = load_suite(a.suite);
    const std::uint64_t seed = resolve_seed(a.seed);
    if (a.reps < 1) throw InputError("--reps must be at least 1");

    // Preset rows keep their scenario number as stream index, matching the
    // tables command; listed scenarios are numbered by position.
    std::vector<ScenarioSpec> specs;
    std::vector<std::uint64_t> index;
    for (const auto& id : suite.presets)
        for (const auto& row : make_preset(id, a.reps).rows) {
            specs.push_back(row.spec);
            index.push_back(static_cast<std::uint64_t>(row.scenario));
        }
    for (std::size_t i = 0; i < suite.scenarios.size(); ++i) {
        ScenarioSpec s = suite.scenarios[i];
        s.replications = a.reps;
        specs.push_back(std::move(s));
        index.push_back(i + 1);
    }

    std::vector<OCReport> reports;
    for (std::size_t i = 0; i < specs.size(); ++i)
        reports.push_back(operating_characteristics(specs[i], seed, index[i], a.workers));

    fs::create_directories(a.out);
    std::ostringstream csv;
    write_oc_csv(csv, reports, specs);
    write_file(fs::path(a.out) / "oc.csv", csv.str());
    nlohmann::json meta{{"seed", seed}, {"replications", a.reps}, {"preset_version", kPresetVersion},
                        {"suite", fs::path(a.suite).filename().string()}};
    write_file(fs::path(a.out) / "run.json", meta.dump(2) + "\n");
    std::cout << csv.str();
    return kExitOk;
}

struct TablesArgs {
    std::string preset;
    std::optional<std::uint64_t> seed;
    int reps = 1000;
    int workers = 1;
    std::string out;
};

int cmd_tables(const TablesArgs& a) {
    const TablePreset preset = make_preset(a.preset, a.reps);
    const std::uint64_t seed = resolve_seed(a.seed);
    const auto reports = simulate_preset(preset, seed, a.workers);
    fs::create_directories(a.out);
    std::ostringstream csv;
    write_tables_csv(csv, preset, reports);
    write_file(fs::path(a.out) / (preset.id + ".csv"), csv.str());
    const std::string text = render_table(preset, reports);
    write_file(fs::path(a.out) / (preset.id + ".txt"), text);
    std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal biological dose selection: decisions, simulation, reproduction tables"};
    app.require_subcommand(1);

    DecideArgs d;
    auto* decide = app.add_subcommand("decide", "Select a dose from end-of-trial data");
    decide->add_option("--input", d.input, "Trial input document (JSON)")->required()->check(CLI::ExistingFile);
    decide->add_option("--method", d.method, "umet, cui, empirical or all")
        ->check(CLI::IsMember({"umet", "cui", "empirical", "all"}));
    decide->add_option("--strategy", d.strategy, "sequential or pairwise (default: from the document)")
        ->check(CLI::IsMember({"sequential", "pairwise"}));
    decide->add_option("--record", d.record, "Also write the JSON decision record to this file");
    decide->add_flag("--json", d.json_stdout, "Print the JSON record instead of the trace");

    SimulateArgs s;
    auto* simulate = app.add_subcommand("simulate", "Operating characteristics of a scenario suite");
    simulate->add_option("--suite", s.suite, "Scenario suite document (JSON)")->required()->check(CLI::ExistingFile);
    simulate->add_option("--seed", s.seed, "Run seed; generated and printed when absent");
    simulate->add_option("--reps", s.reps, "Replications per scenario")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--workers", s.workers, "OpenMP threads")->check(CLI::PositiveNumber);
    simulate->add_option("--out", s.out, "Output directory")->required();

    TablesArgs t;
    auto* tables = app.add_subcommand("tables", "Reproduce a published table side by side");
    tables->add_option("--preset", t.preset, "T5, T6, T7, S2, S3 or S4")->required();
    tables->add_option("--seed", t.seed, "Run seed; generated and printed when absent");
    tables->add_option("--reps", t.reps, "Replications per scenario")->check(CLI::PositiveNumber);
    tables->add_option("--workers", t.workers, "OpenMP threads")->check(CLI::PositiveNumber);
    tables->add_option("--out", t.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decide) return cmd_decide(d);
        if (*simulate) return cmd_simulate(s);
        if (*tables) return cmd_tables(t);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
