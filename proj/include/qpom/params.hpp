#ifndef QPOM_PARAMS_HPP
#define QPOM_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

namespace qpom {

// One optical transition usable for dispersive coupling.
struct AtomicLine {
    std::string name;
    double transition_frequency; // Hz (ordinary)
    double dipole_moment;        // C m
    double linewidth;            // rad/s
};

struct AtomSpecies {
    std::string name;
    double mass;               // kg
    double scattering_length;  // m
    std::vector<AtomicLine> lines;
    double three_body_constant = 0.0; // m^6/s

    void validate() const;
    const AtomicLine& line(const std::string& line_name) const;
};

enum class WallModel { IdealBox, TanhWall, Trapezoid };

struct TrapConfig {
    double length;        // m, box length L
    double atom_number;   // N_0
    // Exactly one of the two transverse descriptions must be set.
    std::optional<double> transverse_trap_frequency; // rad/s
    std::optional<double> effective_area;            // m^2

    WallModel wall_model = WallModel::IdealBox;
    double wall_steepness = 200.0;   // tanh: a, trapezoid: b (dimensionless)
    double wall_depth_mu0 = 80.0;    // tanh wall depth in units of mu0

    void validate() const;
};

struct CavityConfig {
    double cavity_length; // m
    double mode_area;     // m^2
    std::optional<int> mode_index; // n_cav, derived from optics when absent
    double atomic_detuning; // rad/s, signed, measured from the selected line
    double pump_detuning = 0.0; // rad/s

    void validate() const;
};

struct DriveConfig {
    double mean_photon_number = 0.0;   // N_ph,0
    double modulation_amplitude = 0.0; // eta in [0,1]
    double modulation_frequency = 0.0; // rad/s
    double duration = 0.0;             // s

    void validate() const;
};

enum class TransverseGeometry { Harmonic, Box };

struct DerivedScales {
    double coupling_3d;        // g = 4 pi hbar^2 a_sc / m  [J m^3]
    double g_1d;               // J m
    double interaction_energy; // mu0 = g_1d * rho_1d  [J]
    double healing_length;     // m
    double line_density;       // 1/m
    double peak_density;       // 1/m^3 (rho_1d / transverse area)
    double sound_speed;        // m/s
    double transverse_length;  // m (a_perp; 0 for box geometry)
    TransverseGeometry geometry;
    bool one_d_validity; // rho_1d * a_sc << 1
};

// Closed-form scales from atom + trap configuration.
// Healing length follows the convention matching the transverse geometry:
// hbar/sqrt(4 m g_1d rho) for harmonic confinement, hbar/sqrt(2 m g rho/A)
// for a box-shaped cross section.
DerivedScales derive_scales(const AtomSpecies& species, const TrapConfig& trap);

// Healing length used by the split-step solver's dimensionless form,
// hbar/sqrt(4 m mu0), independent of the reporting convention.
double solver_healing_length(const AtomSpecies& species, const DerivedScales& scales);

// Single-photon Rabi frequency g_0 = d sqrt(omega_c / (2 hbar eps0 V_c)).
// mode_volume_fraction is integral |f_cav|^2 dz / L_c (1/2 for a sine mode).
double rabi_frequency(const CavityConfig& cavity, const AtomicLine& line,
                      double mode_volume_fraction = 0.5);

struct ResonantModeResult {
    int quasiparticle_index; // n = 2 n_cav
    int cavity_index;        // n_cav
    double k_cav;            // rad/m before rounding
    double rounding_rel_error;
    bool rounding_warning;
};

// Quasiparticle index selected by momentum conservation for a cavity mode
// commensurate with the trap, k_cav = n_cav pi / L.
ResonantModeResult resonant_mode_index(const CavityConfig& cavity, const TrapConfig& trap,
                                       const AtomicLine& line, double tolerance = 1e-3);

// Circulating power <-> photon number, P_c = hbar omega_c N_ph c / (2 L_c).
double power_from_photon_number(double photon_number, const CavityConfig& cavity,
                                double cavity_frequency);
double photon_number_from_power(double power, const CavityConfig& cavity,
                                double cavity_frequency);

// Static cavity frequency shift from the condensate's refractive overlap,
// delta_omega_c = (g0^2 N0 / Delta_A) * integral |psi0|^2 f_cav^2 dz.
// density_overlap is that integral (1/2 for a box condensate and sine mode).
double cavity_frequency_shift(double rabi_freq, double atomic_detuning,
                              double atom_number, double density_overlap);

inline double hz_to_angular(double hz) { return 6.283185307179586476925287 * hz; }
inline double angular_to_hz(double rad_s) { return rad_s / 6.283185307179586476925287; }

} // namespace qpom

#endif
