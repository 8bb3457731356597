#ifndef QPOM_COUPLING_HPP
#define QPOM_COUPLING_HPP

#include <complex>
#include <string>
#include <vector>

#include "qpom/bogoliubov.hpp"
#include "qpom/gp.hpp"
#include "qpom/params.hpp"

namespace qpom {

// One intensity-modulated cavity laser. Detunings are signed and measured
// from each participating line; both D-lines contribute when present.
struct CavityDrive {
    CavityConfig cavity;
    DriveConfig drive;
    struct Line {
        AtomicLine line;
        double detuning; // rad/s from this line
    };
    std::vector<Line> lines;
    // The mode function is referenced to the trap's left wall,
    // f_cav = sin(k_cav (z + L/2)).
    double half_length = 0.0; // L/2 [m]
    // Cavity mode commensurate with the trap, k_cav = n_cav pi / L. Zero
    // means the raw optical wavenumber is used instead.
    int commensurate_index = 0;

    // sum_i g_{0,i}^2 / Delta_i  [1/s]
    double coupling_sum() const;
    // k_cav: commensurate when an index is set, optical otherwise
    double cavity_wavenumber() const;
};

struct ForceGradientDrive {
    double gradient;  // G_0 [N/m]
    double frequency; // Omega [rad/s]
};

// Condensate density profile entering the coupling quadratures.
struct CondensateProfile {
    std::vector<double> psi0; // 1/sqrt(m), integral psi0^2 dz = 1
    double z0 = 0.0;
    double dz = 0.0;
    double atom_number = 0.0;
};

CondensateProfile profile_from_ground(const GroundState& ground, double atom_number);
// Analytic chi_BT/sqrt(L) profile on an explicit grid.
CondensateProfile box_profile(const TrapConfig& trap, double z0, double dz,
                              std::size_t count);

enum class DriveKind { CavityIntensity, ForceGradient };

// Spatial amplitude of the oscillating potential, with the chemical-potential
// shift already subtracted: integral psi0^2 (v_osc - delta_mu) dz = 0.
struct PotentialDrive {
    DriveKind kind;
    std::vector<double> v_osc;  // J, amplitude profile on the profile grid
    double delta_mu_osc;        // J, amplitude of the mu shift
    double modulation_frequency; // rad/s
    double z0, dz;
    // Resonant co-rotating fraction of the time factor: 1/2 for cos drives,
    // -i/2 for sin drives.
    std::complex<double> rwa_factor;
};

PotentialDrive oscillating_potential(const CavityDrive& drive,
                                     const CondensateProfile& profile);
PotentialDrive oscillating_potential(const ForceGradientDrive& drive,
                                     const CondensateProfile& profile);

enum class CoefficientProvenance { GenericQuadrature, BoxClosedForm };

// RWA (barred) moments of the drive over a mode set: P (displacement),
// O (frequency shift), N (single-mode squeeze), M (beam splitter),
// L (two-mode squeeze). Pair entries are indexed [i][j] over the mode list
// with i > j filled (M_nl, L_nl for n > l).
struct DrivingCoefficients {
    std::vector<int> mode_indices;
    std::vector<std::complex<double>> p, o, n; // J
    std::vector<std::vector<std::complex<double>>> m, l; // J
    CoefficientProvenance provenance;

    std::complex<double> pair_m(int n_idx, int l_idx) const;
    std::complex<double> pair_l(int n_idx, int l_idx) const;
};

DrivingCoefficients generic_coefficients(const PotentialDrive& pdrive,
                                         const std::vector<Mode>& modes,
                                         const CondensateProfile& profile);

// Box-trap closed forms with the momentum selection rules; modes outside the
// rules get exact zeros.
DrivingCoefficients box_coefficients(const CavityDrive& drive,
                                     const std::vector<Mode>& modes,
                                     double atom_number, int n_cav);

struct BackAction {
    double kappa;     // J
    double theta;     // rad
    double kappa_bar; // J, hbar g^2 N_ph0 / (4 Delta) summed over lines
};

// Optomechanical coupling of one mode; closed form for a box trap.
BackAction kappa_box(const CavityDrive& drive, const Mode& mode, double atom_number,
                     int n_cav);
// Generic quadrature of the coupling integral for a sampled mode.
BackAction kappa_generic(const CavityDrive& drive, const Mode& mode,
                         const CondensateProfile& profile);

struct ResonantProcess {
    char family;  // 'P', 'N', 'M', 'L'
    int n, l;     // l = 0 for single-mode families
    double detuning; // rad/s after RWA
    bool hazard;     // also directly displaces a third mode
    int hazard_mode; // index of that mode (0 if none)
};

struct ResonanceReport {
    double modulation_frequency;
    std::vector<ResonantProcess> resonant;
};

// Frequency/momentum bookkeeping: which processes survive the RWA at
// omega_m, and which swap/squeeze drives coincide with a direct displacement
// of the momentum-matched third mode.
ResonanceReport resonance_audit(double omega_m, const std::vector<Mode>& modes,
                                const AtomSpecies& species, const TrapConfig& trap,
                                const DerivedScales& scales, int n_cav,
                                double tol_rel = 1e-3);

enum class BudgetTarget { Displace, Swap, BeamSplit };

struct BudgetReport {
    BudgetTarget target;
    double photon_number;     // N_ph,0 required
    double max_dv_over_mu0;   // static light-potential maximum / mu0
    double duration;          // s
    bool perturbative_warning; // max_dv/mu0 > 0.1
};

// Invert the box closed forms for the photon number that realizes the target
// operation in the given time (displacement: |P| t/hbar = sqrt(N_qp); swap:
// |M| t/hbar = pi/2; beam splitter: pi/4).
BudgetReport drive_budget(BudgetTarget target, double quasiparticle_number,
                          double duration, const CavityDrive& drive,
                          const Mode& mode_n, const Mode& mode_l, double atom_number,
                          const DerivedScales& scales);

} // namespace qpom

#endif
