#ifndef QPOM_CONFIG_HPP
#define QPOM_CONFIG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qpom/gaussian.hpp"
#include "qpom/params.hpp"

namespace qpom {

// One intensity-modulated laser entry from the config's named drive list.
struct NamedDrive {
    std::string name;
    std::string line;      // primary line name
    bool all_lines = true; // include the other lines with shifted detunings
    double detuning = 0.0; // rad/s from the primary line
    DriveConfig drive;
};

struct ProtocolParams {
    int n_low = 20;
    int n_low_mzi = 50;
    double displacement_quasiparticles = 10.0;
    double t_displacement = 0.03;
    double t_bs_protocol = 0.2;  // swap duration used in the timeline
    double t_bs_budget = 0.2;    // swap duration used in photon budgets
    double hold = 0.1;
    double t_interrogation = 0.1;
    double readout_pulse = 8e-7;
    double repetitions = 1e4;
    std::vector<OperationSpec> steps; // optional explicit sequence
};

struct GridParams {
    std::size_t points = 4096;
    double padding = 1.2;
    double wall_height_mu0 = 100.0;
};

// Single source of truth for a scenario.
struct ExperimentConfig {
    AtomSpecies atom;
    TrapConfig trap;
    CavityConfig cavity;
    std::vector<NamedDrive> drives;
    ProtocolParams protocol;
    GridParams grid;

    const NamedDrive& drive(const std::string& name) const;
};

// All frequencies in config files are ordinary Hz (keys end in _hz) and are
// converted to angular units here, once.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

nlohmann::json operation_to_json(const OperationSpec& op);
OperationSpec operation_from_json(const nlohmann::json& j);

} // namespace qpom

#endif
