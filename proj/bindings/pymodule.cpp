#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpom/bogoliubov.hpp"
#include "qpom/config.hpp"
#include "qpom/damping.hpp"
#include "qpom/gaussian.hpp"
#include "qpom/gp.hpp"
#include "qpom/metrology.hpp"
#include "qpom/scenarios.hpp"

namespace py = pybind11;
using namespace qpom;

namespace {

// Reports cross the boundary as plain dicts via JSON strings.
py::object json_to_py(const nlohmann::json& j) {
    const py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_qpom, m) {
    m.doc() = "Cavity-optomechanical quasiparticle toolkit (C++ core)";

    py::class_<AtomicLine>(m, "AtomicLine")
        .def(py::init<>())
        .def_readwrite("name", &AtomicLine::name)
        .def_readwrite("transition_frequency", &AtomicLine::transition_frequency)
        .def_readwrite("dipole_moment", &AtomicLine::dipole_moment)
        .def_readwrite("linewidth", &AtomicLine::linewidth);

    py::class_<AtomSpecies>(m, "AtomSpecies")
        .def(py::init<>())
        .def_readwrite("name", &AtomSpecies::name)
        .def_readwrite("mass", &AtomSpecies::mass)
        .def_readwrite("scattering_length", &AtomSpecies::scattering_length)
        .def_readwrite("lines", &AtomSpecies::lines)
        .def_readwrite("three_body_constant", &AtomSpecies::three_body_constant);

    py::class_<TrapConfig>(m, "TrapConfig")
        .def(py::init<>())
        .def_readwrite("length", &TrapConfig::length)
        .def_readwrite("atom_number", &TrapConfig::atom_number)
        .def_readwrite("transverse_trap_frequency", &TrapConfig::transverse_trap_frequency)
        .def_readwrite("effective_area", &TrapConfig::effective_area);

    py::class_<DerivedScales>(m, "DerivedScales")
        .def_readonly("g_1d", &DerivedScales::g_1d)
        .def_readonly("interaction_energy", &DerivedScales::interaction_energy)
        .def_readonly("healing_length", &DerivedScales::healing_length)
        .def_readonly("line_density", &DerivedScales::line_density)
        .def_readonly("peak_density", &DerivedScales::peak_density)
        .def_readonly("sound_speed", &DerivedScales::sound_speed)
        .def_readonly("transverse_length", &DerivedScales::transverse_length);

    m.def("derive_scales", &derive_scales, py::arg("species"), py::arg("trap"));

    py::class_<Dispersion>(m, "Dispersion")
        .def_readonly("wavenumber", &Dispersion::wavenumber)
        .def_readonly("sigma", &Dispersion::sigma)
        .def_readonly("frequency", &Dispersion::frequency);

    m.def("dispersion", &dispersion, py::arg("n"), py::arg("species"), py::arg("trap"),
          py::arg("scales"));

    py::class_<GroundState>(m, "GroundState")
        .def_readonly("chemical_potential", &GroundState::chemical_potential)
        .def_readonly("chemical_potential_dimless",
                      &GroundState::chemical_potential_dimless)
        .def_readonly("residual", &GroundState::residual)
        .def_readonly("iterations", &GroundState::iterations)
        .def("positions", &GroundState::positions)
        .def("density", &GroundState::density);

    m.def(
        "solve_ground_state",
        [](const AtomSpecies& species, const TrapConfig& trap, std::size_t points,
           double padding) {
            const auto scales = derive_scales(species, trap);
            const auto grid = default_grid(species, scales, trap, points, padding);
            return solve_ground_state(species, trap, scales, grid);
        },
        py::arg("species"), py::arg("trap"), py::arg("points") = 4096,
        py::arg("padding") = 1.2);

    py::class_<GaussianState>(m, "GaussianState")
        .def_static("vacuum", &GaussianState::vacuum, py::arg("mode_ids"))
        .def_readonly("mode_ids", &GaussianState::mode_ids)
        .def_readwrite("d", &GaussianState::d)
        .def_readwrite("sigma", &GaussianState::sigma)
        .def("mean_number", &GaussianState::mean_number)
        .def("coherent_amplitude", &GaussianState::coherent_amplitude)
        .def("is_physical", &GaussianState::is_physical, py::arg("tolerance") = 1e-9);

    m.def("apply_beam_splitter", &apply_beam_splitter);
    m.def("apply_displacement", &apply_displacement);
    m.def("apply_squeeze_single", &apply_squeeze_single);
    m.def("apply_squeeze_two", &apply_squeeze_two);
    m.def("apply_free_phase", &apply_free_phase);

    py::class_<MziResult>(m, "MziResult")
        .def_readonly("output", &MziResult::output)
        .def_readonly("phase_precision_bound", &MziResult::phase_precision_bound)
        .def_readonly("signal_mean_number", &MziResult::signal_mean_number)
        .def_readonly("reference_mean_number", &MziResult::reference_mean_number);

    m.def("mzi_run", &mzi_run, py::arg("coherent_amplitude"), py::arg("theta"),
          py::arg("probe_mode") = 1, py::arg("reference_mode") = 2);

    m.def("qfi_displacement", &qfi_displacement, py::arg("chi"));
    m.def("cramer_rao", &cramer_rao, py::arg("chi"), py::arg("repetitions") = 1.0);
    m.def("airy", [](double x) {
        const auto a = airy(x);
        return std::make_pair(a.ai, a.ai_prime);
    });

    m.def("gamma_three_body", &gamma_three_body, py::arg("species"),
          py::arg("peak_density"));

    m.def("load_config", &load_config, py::arg("path"));
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def_readonly("atom", &ExperimentConfig::atom)
        .def_readonly("trap", &ExperimentConfig::trap);

    m.def("paper_quantities",
          [](const ExperimentConfig& c) { return json_to_py(paper_quantities(c)); },
          py::arg("config"));
    m.def("run_scenario", [](const ExperimentConfig& c, const std::string& name) {
        ScenarioOutput out;
        if (name == "modes") out = run_modes(c);
        else if (name == "budget") out = run_budget(c);
        else if (name == "mzi") out = run_mzi(c);
        else if (name == "pulsed-readout") out = run_pulsed_readout(c);
        else if (name == "force-gradient") out = run_force_gradient(c);
        else if (name == "damping") out = run_damping(c);
        else if (name == "ground-state") out = run_ground_state(c);
        else if (name == "coefficients") out = run_coefficients(c);
        else throw std::invalid_argument("unknown scenario: " + name);
        return json_to_py(out.report);
    });
}
