#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qpom/gp.hpp"
#include "qpom/scenarios.hpp"

namespace fs = std::filesystem;
using qpom::ScenarioOutput;

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::string format = "json";
    double tolerance_scale = 1.0;
    bool quiet = false;
};

void emit(const ScenarioOutput& output, const CliOptions& opts,
          const std::string& name) {
    if (!opts.out_dir.empty()) {
        fs::create_directories(opts.out_dir);
        std::ofstream report(fs::path(opts.out_dir) / (name + ".json"));
        qpom::write_report(output.report, report);
        for (const auto& [table_name, table] : output.tables) {
            std::ofstream csv(fs::path(opts.out_dir) / (table_name + ".csv"));
            csv << table.str();
        }
    }
    if (opts.quiet) return;
    if (opts.format == "csv" && !output.tables.empty()) {
        for (const auto& [table_name, table] : output.tables)
            std::cout << table.str();
    } else {
        qpom::write_report(output.report, std::cout);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasiparticle optomechanics toolkit for trapped 1D quasi-condensates"};
    app.require_subcommand(1);

    CliOptions opts;
    app.add_option("--out", opts.out_dir, "Directory for report and CSV files");
    app.add_option("--format", opts.format, "Console output: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance-scale", opts.tolerance_scale,
                   "Scale factor on reproduction tolerances");
    app.add_flag("--quiet", opts.quiet, "Suppress console output");

    std::string scenario;
    int mode_n = 0;
    double steepness = 0.0;
    std::string expected_path;

    auto add_config = [&](CLI::App* sub) {
        sub->fallthrough(); // allow the global flags after the subcommand
        sub->add_option("config", opts.config_path, "Experiment config (JSON)")
            ->required();
    };

    auto* ground = app.add_subcommand("ground-state", "Solve the trap ground state");
    add_config(ground);
    auto* modes = app.add_subcommand("modes", "Quasiparticle mode table");
    add_config(modes);
    modes->add_option("--n", mode_n, "Additional mode index to include");
    auto* trap = app.add_subcommand("trapezoid", "Trapezoid-well mode scan");
    add_config(trap);
    trap->add_option("--steepness", steepness, "Wall steepness b (default from config)");
    auto* coeff = app.add_subcommand("coefficients", "Driving coefficient tables");
    add_config(coeff);
    auto* budget = app.add_subcommand("budget", "Photon-number budgets");
    add_config(budget);
    auto* mzi = app.add_subcommand("mzi", "Mach-Zehnder sensitivity");
    add_config(mzi);
    auto* readout = app.add_subcommand("pulsed-readout", "Pulsed readout figures");
    add_config(readout);
    auto* force = app.add_subcommand("force-gradient", "Force-gradient sensitivity");
    add_config(force);
    auto* damping = app.add_subcommand("damping", "Loss rates and budget");
    add_config(damping);
    auto* reproduce =
        app.add_subcommand("reproduce-paper", "Regression against the bundled table");
    add_config(reproduce);
    reproduce->add_option("--expected", expected_path,
                          "Expected-values table (JSON; default: bundled)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto config = qpom::load_config(opts.config_path);
        if (ground->parsed()) {
            emit(qpom::run_ground_state(config), opts, "ground_state");
        } else if (modes->parsed()) {
            emit(qpom::run_modes(config, mode_n), opts, "modes");
        } else if (trap->parsed()) {
            // Toy-model default steepness when the config traps with a box.
            const double b = steepness > 0.0
                                 ? steepness
                                 : (config.trap.wall_model == qpom::WallModel::Trapezoid
                                        ? config.trap.wall_steepness
                                        : 108.5);
            emit(qpom::run_trapezoid(config, b), opts, "trapezoid");
        } else if (coeff->parsed()) {
            emit(qpom::run_coefficients(config), opts, "coefficients");
        } else if (budget->parsed()) {
            emit(qpom::run_budget(config), opts, "budget");
        } else if (mzi->parsed()) {
            emit(qpom::run_mzi(config), opts, "mzi");
        } else if (readout->parsed()) {
            emit(qpom::run_pulsed_readout(config), opts, "pulsed_readout");
        } else if (force->parsed()) {
            emit(qpom::run_force_gradient(config), opts, "force_gradient");
        } else if (damping->parsed()) {
            emit(qpom::run_damping(config), opts, "damping");
        } else if (reproduce->parsed()) {
            fs::path table_path = expected_path.empty()
                                      ? fs::path(opts.config_path).parent_path() /
                                            "rb87_expected.json"
                                      : fs::path(expected_path);
            std::ifstream in(table_path);
            if (!in)
                throw std::invalid_argument("cannot open expected-values table: " +
                                            table_path.string());
            nlohmann::json expected;
            in >> expected;
            const auto result =
                qpom::run_reproduce(config, expected, opts.tolerance_scale);
            ScenarioOutput out;
            out.report = result.report;
            emit(out, opts, "reproduce_paper");
            if (!result.all_pass) return 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qpom::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
