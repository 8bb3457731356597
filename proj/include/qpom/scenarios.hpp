#ifndef QPOM_SCENARIOS_HPP
#define QPOM_SCENARIOS_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "qpom/config.hpp"
#include "qpom/coupling.hpp"
#include "qpom/report.hpp"

namespace qpom {

struct ScenarioOutput {
    nlohmann::json report;
    std::map<std::string, CsvTable> tables;
};

// Build the multi-line cavity drive for one named config entry. When the
// entry requests all lines, the other lines join with detunings shifted by
// the line-frequency differences. commensurate_index pins the cavity mode
// aligned with the trap: -1 rounds from this drive's own optics, 0 keeps the
// raw optical wavenumber, positive values are taken as given (scenarios pass
// the preparation laser's index so every drive addresses the same mode).
CavityDrive make_cavity_drive(const ExperimentConfig& config, const std::string& name,
                              int commensurate_index = -1);

ScenarioOutput run_ground_state(const ExperimentConfig& config);
ScenarioOutput run_modes(const ExperimentConfig& config, int extra_mode = 0);
ScenarioOutput run_trapezoid(const ExperimentConfig& config, double steepness,
                             int window = 8);
ScenarioOutput run_coefficients(const ExperimentConfig& config);
ScenarioOutput run_budget(const ExperimentConfig& config);
ScenarioOutput run_mzi(const ExperimentConfig& config);
ScenarioOutput run_pulsed_readout(const ExperimentConfig& config);
ScenarioOutput run_force_gradient(const ExperimentConfig& config);
ScenarioOutput run_damping(const ExperimentConfig& config);

struct ReproduceResult {
    nlohmann::json report;
    bool all_pass;
};

// Run the worked-example pipeline and diff the named quantities against the
// bundled expected-value table (per-quantity tolerances, optionally scaled).
ReproduceResult run_reproduce(const ExperimentConfig& config,
                              const nlohmann::json& expected_table,
                              double tolerance_scale = 1.0);

// The quantities checked by run_reproduce, computed from the config.
nlohmann::json paper_quantities(const ExperimentConfig& config);

} // namespace qpom

#endif
