#ifndef QPOM_GP_HPP
#define QPOM_GP_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qpom/grid.hpp"
#include "qpom/params.hpp"

namespace qpom {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MaxIterationsError : NumericalError {
    using NumericalError::NumericalError;
};

struct GroundState {
    Grid1D grid;
    std::vector<std::complex<double>> psi; // dimensionless, sum |psi|^2 dz = 1
    double chemical_potential;             // J
    double chemical_potential_dimless;     // mu / mu0
    double residual;                       // dimensionless GP residual (L2)
    std::size_t iterations;
    DerivedScales scales;
    double trap_length_dimless;            // L / xi_solver
    double solver_xi;                      // m, hbar/sqrt(4 m mu0)
    std::vector<double> potential;         // dimensionless trap potential on grid
    std::vector<std::string> warnings;

    // Physical grid positions [m] and density [1/m].
    std::vector<double> positions() const;
    std::vector<double> density() const;
};

struct SolverOptions {
    double dtau = 1e-3;          // base imaginary-time step
    double mu_tolerance = 1e-10; // relative change of mu between checks
    double residual_tolerance = 1e-7;
    std::size_t max_iterations = 400000;
    bool warm_start = true;      // Thomas-Fermi initial guess plus staged dtau
    double box_wall_height = 100.0; // ideal-box wall in units of mu0
};

// Dimensionless trap potential sampled on the grid.
std::vector<double> build_potential(const TrapConfig& trap, const DerivedScales& scales,
                                    const Grid1D& grid, double box_wall_height = 100.0);

// Splitting context reused across steps (grid, FFT plans, nonlinearity scale).
class SplitStepContext {
public:
    SplitStepContext(const Grid1D& grid, double trap_length_dimless);

    // One imaginary-time step exp(-H dtau) in Strang-split form, followed by
    // renormalization. Throws NumericalError on overflow/NaN (dtau too large).
    void imaginary_time_step(std::vector<std::complex<double>>& psi,
                             const std::vector<double>& potential, double dtau) const;

    double norm(const std::vector<std::complex<double>>& psi) const;
    void normalize(std::vector<std::complex<double>>& psi) const;

    // mu = <psi| -2 d^2 + V + Ltilde |psi|^2 |psi> (dimensionless).
    double chemical_potential(const std::vector<std::complex<double>>& psi,
                              const std::vector<double>& potential) const;

    // GP energy functional (dimensionless); non-increasing along the flow.
    double energy(const std::vector<std::complex<double>>& psi,
                  const std::vector<double>& potential) const;

    // ||(-2 d^2 + V + Ltilde |psi|^2 - mu) psi||_2 with spectral derivatives.
    double gp_residual(const std::vector<std::complex<double>>& psi,
                       const std::vector<double>& potential) const;

    const Grid1D& grid() const { return grid_; }
    double trap_length_dimless() const { return ltilde_; }

private:
    Grid1D grid_;
    double ltilde_;
    Fft1D fft_;
    std::vector<double> ksq_;
    mutable std::vector<double> half_factor_;
};

// Imaginary-time split-step solution of the stationary GP problem.
GroundState solve_ground_state(const AtomSpecies& species, const TrapConfig& trap,
                               const DerivedScales& scales, const Grid1D& grid,
                               const SolverOptions& options = {});

// Default grid for a trap: J = 4096, L_g = 1.2 L/xi.
Grid1D default_grid(const AtomSpecies& species, const DerivedScales& scales,
                    const TrapConfig& trap, std::size_t points = 4096,
                    double padding = 1.2);

// Chemical potential of a normalized dimensionless state, in joule.
double chemical_potential(const std::vector<std::complex<double>>& psi,
                          const std::vector<double>& potential, const Grid1D& grid,
                          double trap_length_dimless, const DerivedScales& scales);

struct PerturbationResult {
    std::vector<double> delta_psi; // same grid as the ground state
    bool linearization_warning;    // max|dV| / mu > 0.1
};

// Linear response of the ground state to a static potential dV [J], in the
// Thomas-Fermi approximation: delta_psi = -dV * psi0 / (2 mu).
PerturbationResult ground_state_perturbation(const GroundState& ground,
                                             const std::vector<double>& delta_potential);

} // namespace qpom

#endif
