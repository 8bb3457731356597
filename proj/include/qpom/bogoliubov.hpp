#ifndef QPOM_BOGOLIUBOV_HPP
#define QPOM_BOGOLIUBOV_HPP

#include <complex>
#include <optional>
#include <vector>

#include "qpom/gp.hpp"
#include "qpom/params.hpp"

namespace qpom {

struct RegimeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModeRegime { LowEnergy, HighEnergy, Numerical };

// One quasiparticle mode. Sampled u, v (units 1/sqrt(m)) are optional and,
// when present, live on the uniform grid described by z0/dz/sample count.
struct Mode {
    int index = 0;          // n >= 1
    double wavenumber = 0;  // k_n = n pi / L  [1/m]
    double frequency = 0;   // omega_n [rad/s]
    double sigma = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    ModeRegime regime = ModeRegime::LowEnergy;
    std::vector<std::complex<double>> u, v;
    double z0 = 0.0; // position of sample 0 [m]
    double dz = 0.0; // sample spacing [m]

    bool sampled() const { return !u.empty(); }
};

struct Dispersion {
    double wavenumber; // 1/m
    double sigma;
    double frequency;  // rad/s
};

// omega_n = (hbar k^2 / 2m) sigma^2 with sigma = (1 + 2 mu0 / E_k)^(1/4);
// valid across both regimes.
Dispersion dispersion(int n, const AtomSpecies& species, const TrapConfig& trap,
                      const DerivedScales& scales);

// Regime thresholds on E_k / mu0 (the paper only requires "much smaller" /
// "much larger").
inline constexpr double low_energy_threshold = 0.2;
inline constexpr double high_energy_threshold = 5.0;

// Thomas-Fermi box mode u = alpha psi0 phi_c, v = beta psi0 phi_c with
// phi_c = sqrt(2) cos(k_n (z + L/2)). Sampled on the ground-state grid when
// sample=true. Throws RegimeViolation unless enforce_regime=false.
Mode low_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
              const GroundState& ground, bool sample = true, bool enforce_regime = true);

// Kinetic-dominated mode u = phi_c / sqrt(L) inside the box, v = 0.
Mode high_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
               const GroundState& ground, bool sample = true, bool enforce_regime = true);

// Analytic box modes built on chi_BT/sqrt(L) instead of a solved ground
// state; nodes can be aligned with the box for exact quadrature identities.
Mode analytic_box_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
                       const DerivedScales& scales, std::size_t samples,
                       double padding = 1.0);

// Airy function pair (Ai, Ai') with |error| < 1e-12 on [-60, 20].
struct AiryPair { double ai; double ai_prime; };
AiryPair airy(double x);

struct TrapezoidMode {
    int index = 0;          // node-counting quantum number
    double scaled_energy;   // Etilde_n = a^(-2/3) k_n^2 (dimensionless)
    double condition_residual;
    double a_c, a_s, c_r;   // matching coefficients (normalized mode)
    double normalization;   // N
    double steepness;       // b
    double wavenumber;      // k_n [1/m]
    double frequency;       // omega_n [rad/s], E = mu0 + hbar^2 k^2/2m
    bool even_parity;
};

struct TrapezoidModel {
    double steepness;  // b
    double k_cav;      // 1/m
    double length;     // L [m]
    double a_scale;    // atilde = b (2 k_cav)^2 / L  [1/m^3]
    double mass;       // kg
    double mu0;        // J

    double length_scaled() const; // Ltilde = atilde^(1/3) L
    // Cleared-denominator spectrum condition
    // F(E) = 2 k Ai(-E) Ai'(-E) cos(k Lt) + (E Ai(-E)^2 - Ai'(-E)^2) sin(k Lt)
    double spectrum_condition(double scaled_energy) const;
    // Parity-factorized conditions (F = -even * odd / (k...)): used for root
    // polishing and parity tags.
    double even_condition(double scaled_energy) const;
    double odd_condition(double scaled_energy) const;
};

TrapezoidModel make_trapezoid_model(double steepness, double k_cav, const TrapConfig& trap,
                                    const AtomSpecies& species, const DerivedScales& scales);

// All spectrum roots with node index in [n_min, n_max], each bisected until
// |F| < 1e-10 at the root.
std::vector<TrapezoidMode> trapezoid_spectrum(const TrapezoidModel& model, int n_min,
                                              int n_max);

// Fill matching coefficients and normalization for one root.
TrapezoidMode trapezoid_mode(const TrapezoidModel& model, double scaled_energy);

// Sample a trapezoid mode on a uniform grid (u real, v = 0).
Mode sample_trapezoid_mode(const TrapezoidModel& model, const TrapezoidMode& tm,
                           std::size_t samples, double padding = 1.3);

// Max BDG equation residual over the grid interior, normalized by
// hbar omega ||u||; boundary layers of width exclude_margin [m] at the box
// walls are excluded from the norms.
double bdg_residual(const Mode& mode, const AtomSpecies& species, const TrapConfig& trap,
                    const GroundState& ground, double exclude_margin = 0.0);

// integral (u_i* u_j - v_i* v_j) dz for sampled modes on a common grid.
double norm_check(const Mode& a, const Mode& b);

} // namespace qpom

#endif
