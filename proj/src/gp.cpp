#include "qpom/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

using namespace constants;

std::vector<double> GroundState::positions() const {
    std::vector<double> z(grid.point_count);
    for (std::size_t j = 0; j < grid.point_count; ++j) z[j] = grid.point(j) * solver_xi;
    return z;
}

std::vector<double> GroundState::density() const {
    std::vector<double> rho(grid.point_count);
    for (std::size_t j = 0; j < grid.point_count; ++j)
        rho[j] = std::norm(psi[j]) / solver_xi;
    return rho;
}

std::vector<double> build_potential(const TrapConfig& trap, const DerivedScales& scales,
                                    const Grid1D& grid, double box_wall_height) {
    trap.validate();
    const double mu0 = scales.interaction_energy;
    const double mass = mu0 / (scales.sound_speed * scales.sound_speed);
    const double xi = hbar / std::sqrt(4.0 * mass * mu0);
    const double half_box = 0.5 * trap.length / xi;
    if (grid.domain_length <= 2.0 * half_box)
        throw std::invalid_argument("grid must extend beyond the trap");

    std::vector<double> v(grid.point_count, 0.0);
    switch (trap.wall_model) {
    case WallModel::IdealBox: {
        if (box_wall_height < 100.0)
            throw std::invalid_argument("ideal-box wall height must be >= 100 mu0");
        // The jump is crossed over 0.75 xi so the potential stays spectrally
        // representable; the interior is exactly zero a few xi from the walls
        // and the wall value is the requested constant.
        const double crossover = 0.5;
        for (std::size_t j = 0; j < grid.point_count; ++j) {
            const double excess = std::abs(grid.point(j)) - half_box;
            v[j] = box_wall_height * 0.5 * (1.0 + std::tanh(excess / crossover));
        }
        break;
    }
    case WallModel::TanhWall: {
        const double a = trap.wall_steepness;
        const double depth = trap.wall_depth_mu0; // V_{0,b} / mu0
        if (!(depth > 1.0))
            throw std::invalid_argument("tanh wall depth must exceed mu0");
        // Length rescaled so that V = mu0 exactly at z = +-L/2.
        const double shrink = 1.0 - 4.0 * std::atanh(1.0 - 1.0 / depth) / a;
        if (!(shrink > 0.0))
            throw std::invalid_argument("tanh wall too shallow for given steepness");
        const double half_resc = half_box / std::sqrt(shrink);
        for (std::size_t j = 0; j < grid.point_count; ++j) {
            const double x = grid.point(j) / half_resc;
            v[j] = -depth * (std::tanh(a * (1.0 - x * x) / 4.0) - 1.0);
        }
        break;
    }
    case WallModel::Trapezoid: {
        // Slope a = b hbar^2 (2 k_ref)^2 / (2 m L) with the recoil-scale
        // reference wavenumber 2*pi/xi (the optics-specific scan lives in
        // the bogoliubov module).
        const double kref = two_pi / xi;
        const double slope_si = trap.wall_steepness * hbar * hbar * kref * kref /
                                (2.0 * mass * trap.length);
        const double slope_dimless = slope_si * xi / mu0;
        for (std::size_t j = 0; j < grid.point_count; ++j) {
            const double excess = std::abs(grid.point(j)) - half_box;
            v[j] = excess > 0.0 ? slope_dimless * excess : 0.0;
        }
        break;
    }
    }
    return v;
}

SplitStepContext::SplitStepContext(const Grid1D& grid, double trap_length_dimless)
    : grid_(grid), ltilde_(trap_length_dimless), fft_(grid.point_count) {
    auto k = grid_.wavenumbers();
    ksq_.resize(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) ksq_[j] = k[j] * k[j];
}

void SplitStepContext::imaginary_time_step(std::vector<std::complex<double>>& psi,
                                           const std::vector<double>& potential,
                                           double dtau) const {
    if (psi.size() != grid_.point_count || potential.size() != grid_.point_count)
        throw std::invalid_argument("state/potential size mismatch");
    // Both half-steps use the density sampled at the start of the step; the
    // symmetric form keeps the fixed-point bias at O(dtau^2).
    half_factor_.resize(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double local = potential[j] + ltilde_ * std::norm(psi[j]);
        half_factor_[j] = std::exp(-0.5 * local * dtau);
    }
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= half_factor_[j];
    fft_.forward(psi);
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= std::exp(-2.0 * ksq_[j] * dtau);
    fft_.inverse(psi);
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= half_factor_[j];
    const double n = norm(psi);
    if (!std::isfinite(n) || n == 0.0)
        throw NumericalError("imaginary-time step overflowed; reduce dtau");
    const double inv = 1.0 / std::sqrt(n);
    for (auto& p : psi) p *= inv;
}

double SplitStepContext::norm(const std::vector<std::complex<double>>& psi) const {
    double sum = 0.0;
    for (const auto& p : psi) sum += std::norm(p);
    return sum * grid_.spacing();
}

void SplitStepContext::normalize(std::vector<std::complex<double>>& psi) const {
    const double inv = 1.0 / std::sqrt(norm(psi));
    for (auto& p : psi) p *= inv;
}

double SplitStepContext::chemical_potential(const std::vector<std::complex<double>>& psi,
                                            const std::vector<double>& potential) const {
    auto khat = psi;
    fft_.forward(khat);
    double kinetic = 0.0;
    for (std::size_t j = 0; j < khat.size(); ++j) kinetic += 2.0 * ksq_[j] * std::norm(khat[j]);
    kinetic *= grid_.spacing() / static_cast<double>(grid_.point_count);
    double local = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double d = std::norm(psi[j]);
        local += (potential[j] + ltilde_ * d) * d;
    }
    local *= grid_.spacing();
    return kinetic + local;
}

double SplitStepContext::energy(const std::vector<std::complex<double>>& psi,
                                const std::vector<double>& potential) const {
    auto khat = psi;
    fft_.forward(khat);
    double kinetic = 0.0;
    for (std::size_t j = 0; j < khat.size(); ++j) kinetic += 2.0 * ksq_[j] * std::norm(khat[j]);
    kinetic *= grid_.spacing() / static_cast<double>(grid_.point_count);
    double local = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double d = std::norm(psi[j]);
        local += (potential[j] + 0.5 * ltilde_ * d) * d;
    }
    local *= grid_.spacing();
    return kinetic + local;
}

double SplitStepContext::gp_residual(const std::vector<std::complex<double>>& psi,
                                     const std::vector<double>& potential) const {
    const double mu = chemical_potential(psi, potential);
    auto lap = psi;
    fft_.forward(lap);
    for (std::size_t j = 0; j < lap.size(); ++j) lap[j] *= ksq_[j];
    fft_.inverse(lap); // now -d^2 psi
    double sum = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const auto r = 2.0 * lap[j] +
                       (potential[j] + ltilde_ * std::norm(psi[j]) - mu) * psi[j];
        sum += std::norm(r);
    }
    return std::sqrt(sum * grid_.spacing());
}

namespace {

// Thomas-Fermi initial guess: |psi|^2 proportional to max(mu - V, 0), with mu
// fixed by normalization via bisection, then lightly smoothed so the TF kinks
// do not seed grid-scale error.
std::vector<std::complex<double>> thomas_fermi_guess(const SplitStepContext& ctx,
                                                     const std::vector<double>& potential) {
    const auto& grid = ctx.grid();
    const double dz = grid.spacing();
    const double lt = std::max(ctx.trap_length_dimless(), 1.0);
    double lo = *std::min_element(potential.begin(), potential.end());
    double hi = *std::max_element(potential.begin(), potential.end()) + lt + 1.0;
    auto deficit = [&](double mu) {
        double s = 0.0;
        for (double v : potential) s += std::max(mu - v, 0.0);
        return s * dz - lt;
    };
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (deficit(mid) < 0.0 ? lo : hi) = mid;
    }
    const double mu = 0.5 * (lo + hi);
    std::vector<std::complex<double>> psi(grid.point_count);
    for (std::size_t j = 0; j < psi.size(); ++j)
        psi[j] = std::sqrt(std::max(mu - potential[j], 1e-12));
    SplitStepContext smooth(grid, 0.0);
    std::vector<double> zero(grid.point_count, 0.0);
    smooth.imaginary_time_step(psi, zero, 0.02);
    ctx.normalize(psi);
    return psi;
}

} // namespace

GroundState solve_ground_state(const AtomSpecies& species, const TrapConfig& trap,
                               const DerivedScales& scales, const Grid1D& grid,
                               const SolverOptions& options) {
    const double xi = solver_healing_length(species, scales);
    const double ltilde = trap.length / xi;
    SplitStepContext ctx(grid, ltilde);
    auto potential = build_potential(trap, scales, grid, options.box_wall_height);

    std::vector<std::complex<double>> psi;
    if (options.warm_start) {
        psi = thomas_fermi_guess(ctx, potential);
    } else {
        psi.assign(grid.point_count, std::complex<double>(1.0, 0.0));
        ctx.normalize(psi);
    }

    // Step-size ladder: coarse steps drain long-wavelength error cheaply;
    // the fixed-point bias shrinks as dtau^2, so the ladder descends to
    // options.dtau and keeps halving until the residual target is met.
    std::vector<double> ladder;
    if (options.warm_start) {
        for (double d = 0.1; d > 2.0 * options.dtau; d *= 0.5) ladder.push_back(d);
    }
    for (double d = options.dtau; d > options.dtau / 32.0; d *= 0.5) ladder.push_back(d);

    const std::size_t check_every = 200;
    std::size_t total_iters = 0;
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t si = 0; si < ladder.size(); ++si) {
        double dtau = ladder[si];
        double mu_prev = ctx.chemical_potential(psi, potential);
        while (total_iters < options.max_iterations) {
            auto checkpoint = psi;
            try {
                for (std::size_t s = 0; s < check_every; ++s)
                    ctx.imaginary_time_step(psi, potential, dtau);
            } catch (const NumericalError&) {
                psi = std::move(checkpoint);
                dtau *= 0.5; // automatic halving on overflow
                continue;
            }
            total_iters += check_every;
            const double mu = ctx.chemical_potential(psi, potential);
            const double rel = std::abs(mu - mu_prev) / std::abs(mu);
            mu_prev = mu;
            // Intermediate levels only need mu settled on the scale of their
            // own O(dtau^2) fixed-point bias; the target level uses the
            // requested tolerance.
            const double level_tol =
                dtau > options.dtau
                    ? std::clamp(8e-5 * dtau * dtau, options.mu_tolerance, 1e-6)
                    : options.mu_tolerance;
            if (rel < level_tol) break;
        }
        if (dtau <= options.dtau) {
            residual = ctx.gp_residual(psi, potential);
            if (residual < options.residual_tolerance) break;
        }
        if (total_iters >= options.max_iterations) break;
    }
    residual = ctx.gp_residual(psi, potential);
    if (!(residual < options.residual_tolerance))
        throw MaxIterationsError("ground-state solve did not reach the residual target");

    GroundState g{grid,
                  std::move(psi),
                  0.0,
                  0.0,
                  residual,
                  total_iters,
                  scales,
                  ltilde,
                  xi,
                  std::move(potential),
                  {}};
    g.chemical_potential_dimless = ctx.chemical_potential(g.psi, g.potential);
    g.chemical_potential = g.chemical_potential_dimless * scales.interaction_energy;
    if (!scales.one_d_validity)
        g.warnings.push_back("rho_1d * a_sc >= 0.1: 1D description questionable");
    return g;
}

Grid1D default_grid(const AtomSpecies& species, const DerivedScales& scales,
                    const TrapConfig& trap, std::size_t points, double padding) {
    const double xi = solver_healing_length(species, scales);
    return Grid1D(points, padding * trap.length / xi);
}

double chemical_potential(const std::vector<std::complex<double>>& psi,
                          const std::vector<double>& potential, const Grid1D& grid,
                          double trap_length_dimless, const DerivedScales& scales) {
    SplitStepContext ctx(grid, trap_length_dimless);
    return ctx.chemical_potential(psi, potential) * scales.interaction_energy;
}

PerturbationResult ground_state_perturbation(const GroundState& ground,
                                             const std::vector<double>& delta_potential) {
    if (delta_potential.size() != ground.psi.size())
        throw std::invalid_argument("perturbation grid mismatch");
    PerturbationResult r{};
    r.delta_psi.resize(delta_potential.size());
    double max_dv = 0.0;
    for (std::size_t j = 0; j < delta_potential.size(); ++j) {
        r.delta_psi[j] = -delta_potential[j] * ground.psi[j].real() /
                         (2.0 * ground.chemical_potential);
        max_dv = std::max(max_dv, std::abs(delta_potential[j]));
    }
    r.linearization_warning = max_dv / ground.chemical_potential > 0.1;
    return r;
}

} // namespace qpom
