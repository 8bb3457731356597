#include "qpom/config.hpp"

#include <fstream>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

using nlohmann::json;

const NamedDrive& ExperimentConfig::drive(const std::string& name) const {
    for (const auto& d : drives)
        if (d.name == name) return d;
    throw std::invalid_argument("config has no drive named '" + name + "'");
}

namespace {

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument("config key missing or not a number: " + key);
    return j.at(key).get<double>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw std::invalid_argument("config key missing or not a string: " + key);
    return j.at(key).get<std::string>();
}

AtomSpecies parse_atom(const json& j) {
    AtomSpecies a;
    a.name = j.value("name", "atom");
    a.mass = require_number(j, "mass_kg");
    a.scattering_length = require_number(j, "scattering_length_m");
    a.three_body_constant = j.value("three_body_constant_m6_s", 0.0);
    if (!j.contains("lines") || !j.at("lines").is_array())
        throw std::invalid_argument("config key missing: atom.lines");
    for (const auto& lj : j.at("lines")) {
        AtomicLine l;
        l.name = require_string(lj, "name");
        l.transition_frequency = require_number(lj, "transition_frequency_hz");
        l.dipole_moment = require_number(lj, "dipole_moment_cm");
        l.linewidth = hz_to_angular(lj.value("linewidth_hz", 0.0));
        a.lines.push_back(l);
    }
    a.validate();
    return a;
}

TrapConfig parse_trap(const json& j) {
    TrapConfig t;
    t.length = require_number(j, "length_m");
    t.atom_number = require_number(j, "atom_number");
    if (j.contains("transverse_trap_frequency_hz"))
        t.transverse_trap_frequency =
            hz_to_angular(j.at("transverse_trap_frequency_hz").get<double>());
    if (j.contains("effective_area_m2"))
        t.effective_area = j.at("effective_area_m2").get<double>();
    if (j.contains("wall")) {
        const auto& w = j.at("wall");
        const auto model = require_string(w, "model");
        if (model == "ideal_box") {
            t.wall_model = WallModel::IdealBox;
        } else if (model == "tanh") {
            t.wall_model = WallModel::TanhWall;
            t.wall_steepness = w.value("steepness", 200.0);
            t.wall_depth_mu0 = w.value("depth_mu0", 80.0);
        } else if (model == "trapezoid") {
            t.wall_model = WallModel::Trapezoid;
            t.wall_steepness = w.value("steepness", 108.5);
        } else {
            throw std::invalid_argument("unknown wall model: " + model);
        }
    }
    t.validate();
    return t;
}

CavityConfig parse_cavity(const json& j) {
    CavityConfig c;
    c.cavity_length = require_number(j, "cavity_length_m");
    c.mode_area = require_number(j, "mode_area_m2");
    if (j.contains("mode_index")) c.mode_index = j.at("mode_index").get<int>();
    c.atomic_detuning = hz_to_angular(j.value("detuning_hz", 1.0));
    c.pump_detuning = hz_to_angular(j.value("pump_detuning_hz", 0.0));
    return c;
}

NamedDrive parse_drive(const json& j) {
    NamedDrive d;
    d.name = require_string(j, "name");
    d.line = require_string(j, "line");
    d.all_lines = j.value("all_lines", true);
    d.detuning = hz_to_angular(require_number(j, "detuning_hz"));
    d.drive.mean_photon_number = j.value("mean_photon_number", 0.0);
    d.drive.modulation_amplitude = j.value("modulation_amplitude", 1.0);
    d.drive.modulation_frequency = hz_to_angular(j.value("modulation_frequency_hz", 0.0));
    d.drive.duration = j.value("duration_s", 1.0);
    d.drive.validate();
    return d;
}

} // namespace

nlohmann::json operation_to_json(const OperationSpec& op) {
    json j;
    switch (op.kind) {
    case OpKind::BeamSplit: j["op"] = "beam_split"; break;
    case OpKind::Displace: j["op"] = "displace"; break;
    case OpKind::Squeeze1: j["op"] = "squeeze1"; break;
    case OpKind::Squeeze2: j["op"] = "squeeze2"; break;
    case OpKind::FreePhase: j["op"] = "free_phase"; break;
    }
    j["modes"] = op.mode_l != 0 ? json::array({op.mode_n, op.mode_l})
                                : json::array({op.mode_n});
    j["parameter"] = {op.parameter.real(), op.parameter.imag()};
    j["duration_s"] = op.duration;
    return j;
}

OperationSpec operation_from_json(const nlohmann::json& j) {
    OperationSpec op;
    const auto kind = j.at("op").get<std::string>();
    if (kind == "beam_split") op.kind = OpKind::BeamSplit;
    else if (kind == "displace") op.kind = OpKind::Displace;
    else if (kind == "squeeze1") op.kind = OpKind::Squeeze1;
    else if (kind == "squeeze2") op.kind = OpKind::Squeeze2;
    else if (kind == "free_phase") op.kind = OpKind::FreePhase;
    else throw std::invalid_argument("unknown protocol op: " + kind);
    const auto& modes = j.at("modes");
    op.mode_n = modes.at(0).get<int>();
    if (modes.size() > 1) op.mode_l = modes.at(1).get<int>();
    const auto& p = j.at("parameter");
    op.parameter = {p.at(0).get<double>(), p.at(1).get<double>()};
    op.duration = j.value("duration_s", 0.0);
    return op;
}

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig c;
    if (!j.contains("atom") || !j.contains("trap") || !j.contains("cavity"))
        throw std::invalid_argument("config needs atom, trap and cavity sections");
    c.atom = parse_atom(j.at("atom"));
    c.trap = parse_trap(j.at("trap"));
    c.cavity = parse_cavity(j.at("cavity"));
    if (j.contains("drives"))
        for (const auto& dj : j.at("drives")) c.drives.push_back(parse_drive(dj));
    if (j.contains("protocol")) {
        const auto& p = j.at("protocol");
        c.protocol.n_low = p.value("n_low", 20);
        c.protocol.n_low_mzi = p.value("n_low_mzi", 50);
        c.protocol.displacement_quasiparticles =
            p.value("displacement_quasiparticles", 10.0);
        c.protocol.t_displacement = p.value("t_displacement_s", 0.03);
        c.protocol.t_bs_protocol = p.value("t_bs_protocol_s", 0.2);
        c.protocol.t_bs_budget = p.value("t_bs_budget_s", 0.2);
        c.protocol.hold = p.value("hold_s", 0.1);
        c.protocol.t_interrogation = p.value("t_interrogation_s", 0.1);
        c.protocol.readout_pulse = p.value("readout_pulse_s", 8e-7);
        c.protocol.repetitions = p.value("repetitions", 1e4);
        if (p.contains("steps"))
            for (const auto& sj : p.at("steps"))
                c.protocol.steps.push_back(operation_from_json(sj));
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        c.grid.points = g.value("points", std::size_t{4096});
        c.grid.padding = g.value("padding", 1.2);
        c.grid.wall_height_mu0 = g.value("box_wall_height_mu0", 100.0);
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(j);
}

} // namespace qpom
