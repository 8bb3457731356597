#ifndef QPOM_METROLOGY_HPP
#define QPOM_METROLOGY_HPP

#include <complex>
#include <string>
#include <vector>

#include "qpom/gaussian.hpp"
#include "qpom/params.hpp"

namespace qpom {

struct SensitivityReport {
    std::string quantity;
    double bound;
    std::string units;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::string> assumptions;
};

// Standard-quantum-limit phase bound of the quasiparticle MZI,
// DeltaTheta >= 1/|alpha| (reached at Theta = pi/2).
SensitivityReport mzi_phase_bound(double coherent_amplitude);

// Relative scattering-length precision 2/(omega_low t sqrt(N_high)), using
// omega_low proportional to sqrt(a_sc).
SensitivityReport scattering_length_precision(double omega_low, double interrogation_time,
                                              double probe_quasiparticles);

struct ReadoutResult {
    double p_shift;      // <Delta P_L>
    double phase;        // phi_ba
    double phase_noise;  // Delta phi >= 1/sqrt(N_ph)
    double snr;          // |<Delta P_L>| / 2
    double chi;          // |kappa| Delta t / hbar
    bool short_pulse_warning; // Delta t * omega_mode > 0.1
};

// Pulsed imprint of the mode's X quadrature on the cavity phase,
// <Delta P_L> = -(2 kappa / hbar) <b + b^dag> Delta t, evaluated at the
// stroboscopic instants (omega t_m multiple of 2 pi unless a phase is given).
ReadoutResult pulsed_readout(double kappa, double pulse_duration,
                             const GaussianState& state, int mode_id,
                             double photon_number, double mode_frequency,
                             double stroboscopic_phase = 0.0);

// QFI for displacement estimation through the pulsed readout, 16chi^2/(1+4chi^2).
double qfi_displacement(double chi);

// Cramer-Rao variance bound (1/N_meas)(1/4 + 1/(16 chi^2)); infinite at chi=0.
double cramer_rao(double chi, double repetitions);

// Displacement amplitude accumulated from a resonant force gradient,
// P = Pi t / hbar with Pi = i sqrt(2 N0) G0 / (sigma_n k_n^2); zero for odd n.
std::complex<double> force_gradient_amplitude(double gradient, double duration, int n,
                                              double sigma_n, double k_n,
                                              double atom_number);

struct ForceGradientBound {
    double g_min;                 // N/m, single shot
    double equivalent_frequency;  // Hz, sqrt(G/m)/2pi
    double g_min_repeated;        // N/m after N_meas repetitions
    double equivalent_frequency_repeated; // Hz, equivalent_frequency/sqrt(N_meas)
    double repetitions;
    SensitivityReport report;
};

// Minimal detectable force gradient at single-quasiparticle readout
// precision: |Pi| t / hbar = 1.
ForceGradientBound min_force_gradient(const AtomSpecies& species, double omega_n,
                                      double sigma_n, double k_n, double atom_number,
                                      double interrogation_time, double repetitions = 1.0);

} // namespace qpom

#endif
