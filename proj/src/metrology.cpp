#include "qpom/metrology.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

using namespace constants;

SensitivityReport mzi_phase_bound(double coherent_amplitude) {
    SensitivityReport r;
    r.quantity = "mzi_phase";
    r.units = "rad";
    r.bound = coherent_amplitude > 0.0 ? 1.0 / coherent_amplitude
                                       : std::numeric_limits<double>::infinity();
    r.inputs = {{"coherent_amplitude", coherent_amplitude}};
    r.assumptions = {"standard quantum limit, optimum at Theta = pi/2",
                     "reference mode in vacuum"};
    return r;
}

SensitivityReport scattering_length_precision(double omega_low, double interrogation_time,
                                              double probe_quasiparticles) {
    if (!(omega_low > 0.0) || !(interrogation_time > 0.0) ||
        !(probe_quasiparticles > 0.0))
        throw std::invalid_argument("scattering-length bound needs positive inputs");
    SensitivityReport r;
    r.quantity = "relative_scattering_length";
    r.units = "dimensionless";
    r.bound = 2.0 / (omega_low * interrogation_time * std::sqrt(probe_quasiparticles));
    r.inputs = {{"omega_low_rad_s", omega_low},
                {"interrogation_time_s", interrogation_time},
                {"probe_quasiparticles", probe_quasiparticles}};
    r.assumptions = {"omega_low scales as sqrt(a_sc)",
                     "phase difference Delta omega * t accumulated between arms"};
    return r;
}

ReadoutResult pulsed_readout(double kappa, double pulse_duration,
                             const GaussianState& state, int mode_id,
                             double photon_number, double mode_frequency,
                             double stroboscopic_phase) {
    if (!(photon_number > 0.0))
        throw std::invalid_argument("readout needs a populated cavity mode");
    ReadoutResult r{};
    const auto amp = state.coherent_amplitude(mode_id);
    // <b e^{-i phi} + b^dag e^{i phi}> at the readout instant.
    const double x_quad =
        2.0 * (amp * std::exp(std::complex<double>(0.0, -stroboscopic_phase))).real();
    r.p_shift = -(2.0 * kappa / hbar) * x_quad * pulse_duration;
    r.phase = r.p_shift / (2.0 * std::sqrt(photon_number));
    r.phase_noise = 1.0 / std::sqrt(photon_number);
    r.snr = 0.5 * std::abs(r.p_shift);
    r.chi = std::abs(kappa) * pulse_duration / hbar;
    r.short_pulse_warning = pulse_duration * mode_frequency > 0.1;
    return r;
}

double qfi_displacement(double chi) {
    if (chi < 0.0) throw std::invalid_argument("chi must be nonnegative");
    return 16.0 * chi * chi / (1.0 + 4.0 * chi * chi);
}

double cramer_rao(double chi, double repetitions) {
    if (chi < 0.0) throw std::invalid_argument("chi must be nonnegative");
    if (!(repetitions >= 1.0)) throw std::invalid_argument("repetitions must be >= 1");
    if (chi == 0.0) return std::numeric_limits<double>::infinity();
    return (0.25 + 1.0 / (16.0 * chi * chi)) / repetitions;
}

std::complex<double> force_gradient_amplitude(double gradient, double duration, int n,
                                              double sigma_n, double k_n,
                                              double atom_number) {
    if (n < 1) throw std::invalid_argument("mode index must be >= 1");
    if (n % 2 != 0) return 0.0; // parity: the z^2 drive has no overlap with odd modes
    const std::complex<double> pi_n(
        0.0, std::sqrt(2.0 * atom_number) * gradient / (sigma_n * k_n * k_n));
    return pi_n * duration / hbar;
}

ForceGradientBound min_force_gradient(const AtomSpecies& species, double omega_n,
                                      double sigma_n, double k_n, double atom_number,
                                      double interrogation_time, double repetitions) {
    if (!(interrogation_time > 0.0))
        throw std::invalid_argument("interrogation time must be positive");
    ForceGradientBound b{};
    b.g_min = hbar * sigma_n * k_n * k_n /
              (interrogation_time * std::sqrt(2.0 * atom_number));
    b.equivalent_frequency = std::sqrt(b.g_min / species.mass) / two_pi;
    b.repetitions = repetitions;
    b.g_min_repeated = b.g_min / std::sqrt(repetitions);
    // Reported the way the estimate chains: readout precision, hence the
    // equivalent frequency, improves by 1/sqrt(N_meas).
    b.equivalent_frequency_repeated = b.equivalent_frequency / std::sqrt(repetitions);

    b.report.quantity = "min_force_gradient";
    b.report.units = "N/m";
    b.report.bound = b.g_min;
    b.report.inputs = {{"omega_n_rad_s", omega_n},
                       {"sigma_n", sigma_n},
                       {"k_n_per_m", k_n},
                       {"atom_number", atom_number},
                       {"interrogation_time_s", interrogation_time},
                       {"repetitions", repetitions}};
    b.report.assumptions = {"single-quasiparticle readout precision in a single shot",
                            "drive on resonance with the probe mode"};
    return b;
}

} // namespace qpom
