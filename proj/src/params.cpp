#include "qpom/params.hpp"

#include <cmath>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

using namespace constants;

void AtomSpecies::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("atom mass must be positive");
    if (!(scattering_length > 0.0))
        throw std::invalid_argument("scattering length must be positive");
    if (lines.empty()) throw std::invalid_argument("species needs at least one line");
    for (const auto& l : lines)
        if (!(l.transition_frequency > 0.0))
            throw std::invalid_argument("line frequency must be positive");
}

const AtomicLine& AtomSpecies::line(const std::string& line_name) const {
    for (const auto& l : lines)
        if (l.name == line_name) return l;
    throw std::invalid_argument("unknown atomic line: " + line_name);
}

void TrapConfig::validate() const {
    if (!(length > 0.0)) throw std::invalid_argument("trap length must be positive");
    if (!(atom_number >= 1.0)) throw std::invalid_argument("atom number must be >= 1");
    const bool has_freq = transverse_trap_frequency.has_value();
    const bool has_area = effective_area.has_value();
    if (has_freq == has_area)
        throw std::invalid_argument(
            "exactly one of transverse_trap_frequency or effective_area must be given");
    if (has_freq && !(*transverse_trap_frequency > 0.0))
        throw std::invalid_argument("transverse trap frequency must be positive");
    if (has_area && !(*effective_area > 0.0))
        throw std::invalid_argument("effective area must be positive");
}

void CavityConfig::validate() const {
    if (!(cavity_length > 0.0)) throw std::invalid_argument("cavity length must be positive");
    if (!(mode_area > 0.0)) throw std::invalid_argument("cavity mode area must be positive");
    if (mode_index && *mode_index < 1)
        throw std::invalid_argument("cavity mode index must be a positive integer");
    if (atomic_detuning == 0.0)
        throw std::invalid_argument("atomic detuning must be nonzero");
}

void DriveConfig::validate() const {
    if (mean_photon_number < 0.0)
        throw std::invalid_argument("mean photon number must be nonnegative");
    if (modulation_amplitude < 0.0 || modulation_amplitude > 1.0)
        throw std::invalid_argument("modulation amplitude must lie in [0, 1]");
    if (modulation_frequency < 0.0)
        throw std::invalid_argument("modulation frequency must be nonnegative");
    if (!(duration > 0.0)) throw std::invalid_argument("drive duration must be positive");
}

DerivedScales derive_scales(const AtomSpecies& species, const TrapConfig& trap) {
    species.validate();
    trap.validate();

    DerivedScales s{};
    s.coupling_3d = 4.0 * pi * hbar * hbar * species.scattering_length / species.mass;
    s.line_density = trap.atom_number / trap.length;

    if (trap.transverse_trap_frequency) {
        s.geometry = TransverseGeometry::Harmonic;
        s.transverse_length = std::sqrt(hbar / (species.mass * *trap.transverse_trap_frequency));
        s.g_1d = s.coupling_3d / (two_pi * s.transverse_length * s.transverse_length);
        s.peak_density = s.line_density / (pi * s.transverse_length * s.transverse_length);
        s.interaction_energy = s.g_1d * s.line_density;
        s.healing_length =
            hbar / std::sqrt(4.0 * species.mass * s.g_1d * s.line_density);
    } else {
        s.geometry = TransverseGeometry::Box;
        s.transverse_length = 0.0;
        s.g_1d = s.coupling_3d / *trap.effective_area;
        s.peak_density = s.line_density / *trap.effective_area;
        s.interaction_energy = s.g_1d * s.line_density;
        s.healing_length =
            hbar / std::sqrt(2.0 * species.mass * s.g_1d * s.line_density);
    }
    s.sound_speed = std::sqrt(s.g_1d * s.line_density / species.mass);
    s.one_d_validity = s.line_density * species.scattering_length < 0.1;
    return s;
}

double solver_healing_length(const AtomSpecies& species, const DerivedScales& scales) {
    return hbar / std::sqrt(4.0 * species.mass * scales.interaction_energy);
}

double rabi_frequency(const CavityConfig& cavity, const AtomicLine& line,
                      double mode_volume_fraction) {
    cavity.validate();
    const double omega_c = two_pi * line.transition_frequency + cavity.atomic_detuning;
    const double mode_volume = cavity.cavity_length * cavity.mode_area * mode_volume_fraction;
    return line.dipole_moment * std::sqrt(omega_c / (2.0 * hbar * epsilon0 * mode_volume));
}

ResonantModeResult resonant_mode_index(const CavityConfig& cavity, const TrapConfig& trap,
                                       const AtomicLine& line, double tolerance) {
    cavity.validate();
    trap.validate();
    ResonantModeResult r{};
    const double nu = line.transition_frequency + cavity.atomic_detuning / two_pi;
    r.k_cav = two_pi * nu / speed_of_light;
    const double n_exact = r.k_cav * trap.length / pi;
    r.cavity_index = cavity.mode_index ? *cavity.mode_index
                                       : static_cast<int>(std::lround(n_exact));
    r.rounding_rel_error = std::abs(r.cavity_index - n_exact) / n_exact;
    r.rounding_warning = r.rounding_rel_error > tolerance;
    r.quasiparticle_index = 2 * r.cavity_index;
    return r;
}

double power_from_photon_number(double photon_number, const CavityConfig& cavity,
                                double cavity_frequency) {
    if (photon_number < 0.0) throw std::invalid_argument("photon number must be nonnegative");
    return hbar * cavity_frequency * photon_number * speed_of_light /
           (2.0 * cavity.cavity_length);
}

double photon_number_from_power(double power, const CavityConfig& cavity,
                                double cavity_frequency) {
    if (power < 0.0) throw std::invalid_argument("power must be nonnegative");
    return 2.0 * cavity.cavity_length * power / (hbar * cavity_frequency * speed_of_light);
}

double cavity_frequency_shift(double rabi_freq, double atomic_detuning,
                              double atom_number, double density_overlap) {
    return rabi_freq * rabi_freq * atom_number * density_overlap / atomic_detuning;
}

} // namespace qpom
