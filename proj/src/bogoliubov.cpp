#include "qpom/bogoliubov.hpp"

#include <boost/math/special_functions/airy.hpp>

#include <algorithm>
#include <cmath>

#include "qpom/constants.hpp"

namespace qpom {

using namespace constants;

Dispersion dispersion(int n, const AtomSpecies& species, const TrapConfig& trap,
                      const DerivedScales& scales) {
    if (n < 1) throw std::invalid_argument("mode index must be >= 1");
    Dispersion d{};
    d.wavenumber = static_cast<double>(n) * pi / trap.length;
    const double ek = hbar * hbar * d.wavenumber * d.wavenumber / (2.0 * species.mass);
    d.sigma = std::pow(1.0 + 2.0 * scales.interaction_energy / ek, 0.25);
    d.frequency = ek * d.sigma * d.sigma / hbar;
    return d;
}

namespace {

Mode make_mode(int n, const Dispersion& d, ModeRegime regime) {
    Mode m;
    m.index = n;
    m.wavenumber = d.wavenumber;
    m.frequency = d.frequency;
    m.sigma = d.sigma;
    m.alpha = 0.5 * (1.0 / d.sigma + d.sigma);
    m.beta = 0.5 * (1.0 / d.sigma - d.sigma);
    m.regime = regime;
    return m;
}

double kinetic_over_mu(const Dispersion& d, const AtomSpecies& species,
                       const DerivedScales& scales) {
    const double ek = hbar * hbar * d.wavenumber * d.wavenumber / (2.0 * species.mass);
    return ek / scales.interaction_energy;
}

} // namespace

Mode low_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
              const GroundState& ground, bool sample, bool enforce_regime) {
    const auto d = dispersion(n, species, trap, ground.scales);
    const double ratio = kinetic_over_mu(d, species, ground.scales);
    if (enforce_regime && ratio > low_energy_threshold)
        throw RegimeViolation("mode " + std::to_string(n) + " not in the low-energy regime");
    Mode m = make_mode(n, d, ModeRegime::LowEnergy);
    if (sample) {
        const double xi = ground.solver_xi;
        m.z0 = ground.grid.point(0) * xi;
        m.dz = ground.grid.spacing() * xi;
        m.u.resize(ground.grid.point_count);
        m.v.resize(ground.grid.point_count);
        for (std::size_t j = 0; j < m.u.size(); ++j) {
            const double z = m.z0 + m.dz * static_cast<double>(j);
            const double phi_c = std::sqrt(2.0) *
                                 std::cos(d.wavenumber * (z + 0.5 * trap.length));
            const double psi0 = ground.psi[j].real() / std::sqrt(xi);
            m.u[j] = m.alpha * psi0 * phi_c;
            m.v[j] = m.beta * psi0 * phi_c;
        }
    }
    return m;
}

Mode high_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
               const GroundState& ground, bool sample, bool enforce_regime) {
    const auto d = dispersion(n, species, trap, ground.scales);
    const double ratio = kinetic_over_mu(d, species, ground.scales);
    if (enforce_regime && ratio < high_energy_threshold)
        throw RegimeViolation("mode " + std::to_string(n) + " not in the high-energy regime");
    Mode m = make_mode(n, d, ModeRegime::HighEnergy);
    if (sample) {
        const double xi = ground.solver_xi;
        m.z0 = ground.grid.point(0) * xi;
        m.dz = ground.grid.spacing() * xi;
        m.u.resize(ground.grid.point_count);
        m.v.assign(ground.grid.point_count, 0.0);
        for (std::size_t j = 0; j < m.u.size(); ++j) {
            const double z = m.z0 + m.dz * static_cast<double>(j);
            if (std::abs(z) > 0.5 * trap.length) {
                m.u[j] = 0.0;
                continue;
            }
            m.u[j] = std::sqrt(2.0 / trap.length) *
                     std::cos(d.wavenumber * (z + 0.5 * trap.length));
        }
    }
    return m;
}

Mode analytic_box_mode(int n, const AtomSpecies& species, const TrapConfig& trap,
                       const DerivedScales& scales, std::size_t samples, double padding) {
    const auto d = dispersion(n, species, trap, scales);
    const double ratio = kinetic_over_mu(d, species, scales);
    Mode m = make_mode(n, d,
                       ratio > high_energy_threshold ? ModeRegime::HighEnergy
                                                     : ModeRegime::LowEnergy);
    const double half = 0.5 * padding * trap.length;
    m.z0 = -half;
    m.dz = 2.0 * half / static_cast<double>(samples - 1);
    m.u.resize(samples);
    m.v.resize(samples);
    const double psi0 = 1.0 / std::sqrt(trap.length);
    for (std::size_t j = 0; j < samples; ++j) {
        const double z = m.z0 + m.dz * static_cast<double>(j);
        if (std::abs(z) > 0.5 * trap.length * (1.0 + 1e-12)) {
            m.u[j] = m.v[j] = 0.0;
            continue;
        }
        const double phi_c =
            std::sqrt(2.0) * std::cos(d.wavenumber * (z + 0.5 * trap.length));
        m.u[j] = m.alpha * psi0 * phi_c;
        m.v[j] = m.beta * psi0 * phi_c;
    }
    return m;
}

AiryPair airy(double x) {
    if (x < -60.0 || x > 20.0)
        throw DomainError("airy argument outside [-60, 20]");
    return {boost::math::airy_ai(x), boost::math::airy_ai_prime(x)};
}

double TrapezoidModel::length_scaled() const {
    return std::cbrt(a_scale) * length;
}

double TrapezoidModel::spectrum_condition(double e) const {
    const double k = std::sqrt(e);
    const auto a = airy(-e);
    const double kl = k * length_scaled();
    return 2.0 * k * a.ai * a.ai_prime * std::cos(kl) +
           (e * a.ai * a.ai - a.ai_prime * a.ai_prime) * std::sin(kl);
}

double TrapezoidModel::even_condition(double e) const {
    const double k = std::sqrt(e);
    const auto a = airy(-e);
    const double half = 0.5 * k * length_scaled();
    return a.ai_prime * std::cos(half) + k * a.ai * std::sin(half);
}

double TrapezoidModel::odd_condition(double e) const {
    const double k = std::sqrt(e);
    const auto a = airy(-e);
    const double half = 0.5 * k * length_scaled();
    return a.ai_prime * std::sin(half) - k * a.ai * std::cos(half);
}

TrapezoidModel make_trapezoid_model(double steepness, double k_cav, const TrapConfig& trap,
                                    const AtomSpecies& species, const DerivedScales& scales) {
    if (!(steepness > 0.0)) throw std::invalid_argument("trapezoid steepness must be > 0");
    TrapezoidModel m{};
    m.steepness = steepness;
    m.k_cav = k_cav;
    m.length = trap.length;
    m.a_scale = steepness * (2.0 * k_cav) * (2.0 * k_cav) / trap.length;
    m.mass = species.mass;
    m.mu0 = scales.interaction_energy;
    return m;
}

namespace {

// Semiclassical phase 2*zeta + k*Lt used to bracket one root per index.
double phase_of(const TrapezoidModel& model, double ktilde) {
    return ktilde * model.length_scaled() + (4.0 / 3.0) * ktilde * ktilde * ktilde;
}

double ktilde_for_phase(const TrapezoidModel& model, double target) {
    double k = target / model.length_scaled();
    for (int it = 0; it < 100; ++it) {
        const double f = phase_of(model, k) - target;
        const double df = model.length_scaled() + 4.0 * k * k;
        const double step = f / df;
        k -= step;
        if (std::abs(step) < 1e-15 * std::max(k, 1.0)) break;
    }
    return std::max(k, 1e-9);
}

} // namespace

std::vector<TrapezoidMode> trapezoid_spectrum(const TrapezoidModel& model, int n_min,
                                              int n_max) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad spectrum window");
    // Enumerate sign changes of the cleared condition from the bottom of the
    // spectrum; the i-th sign change is the mode with i-1 nodes. Counting
    // from the bottom keeps the index exact in every wall-steepness regime.
    const double khi_scan =
        ktilde_for_phase(model, (static_cast<double>(n_max) + 1.0) * pi);
    if (khi_scan * khi_scan > 58.0)
        throw DomainError("spectrum window requires Ai arguments outside [-60, 20]");
    const double dk = std::min(pi / model.length_scaled(), 0.05) / 8.0;

    std::vector<TrapezoidMode> out;
    int index = 0;
    double k_prev = 0.5 * dk;
    double f_prev = model.spectrum_condition(k_prev * k_prev);
    for (double k = k_prev + dk; k <= khi_scan + dk; k += dk) {
        const double f = model.spectrum_condition(k * k);
        if (f == 0.0 || f * f_prev < 0.0) {
            ++index;
            if (index >= n_min && index <= n_max) {
                double elo = k_prev * k_prev, ehi = k * k;
                double flo = f_prev;
                for (int it = 0; it < 200 && ehi - elo > 1e-16 * std::max(1.0, ehi);
                     ++it) {
                    const double mid = 0.5 * (elo + ehi);
                    const double fm = model.spectrum_condition(mid);
                    if (fm == 0.0) {
                        elo = ehi = mid;
                        break;
                    }
                    if (fm * flo < 0.0) {
                        ehi = mid;
                    } else {
                        elo = mid;
                        flo = fm;
                    }
                }
                auto tm = trapezoid_mode(model, 0.5 * (elo + ehi));
                tm.index = index;
                out.push_back(tm);
            }
            if (index > n_max) break;
        }
        k_prev = k;
        f_prev = f;
    }
    return out;
}

TrapezoidMode trapezoid_mode(const TrapezoidModel& model, double e) {
    TrapezoidMode tm{};
    tm.scaled_energy = e;
    tm.condition_residual = std::abs(model.spectrum_condition(e));
    tm.steepness = model.steepness;
    tm.even_parity = std::abs(model.even_condition(e)) < std::abs(model.odd_condition(e));

    const double acbrt = std::cbrt(model.a_scale);
    const double ktilde = std::sqrt(e);
    const double k = acbrt * ktilde;       // physical wavenumber
    const double lt = model.length_scaled();
    const auto a = airy(-e);
    const double s_coef = -a.ai_prime / ktilde; // sin amplitude, cos amplitude = Ai

    // Tail coefficient ratio C_R / C_L; +-1 up to root residual.
    tm.c_r = std::cos(ktilde * lt) - (a.ai_prime / (ktilde * a.ai)) * std::sin(ktilde * lt);

    // L2 norm of the unnormalized piecewise mode (C_L = 1).
    const double tail_integral = (a.ai_prime * a.ai_prime + e * a.ai * a.ai) / acbrt;
    const double tails = tail_integral * (1.0 + tm.c_r * tm.c_r);
    const double L = model.length;
    const double s2kl = std::sin(2.0 * k * L);
    const double skl = std::sin(k * L);
    const double bulk = a.ai * a.ai * (0.5 * L + s2kl / (4.0 * k)) +
                        s_coef * s_coef * (0.5 * L - s2kl / (4.0 * k)) +
                        2.0 * a.ai * s_coef * skl * skl / (2.0 * k);
    const double norm_inv_sq = tails + bulk;
    const double n_phys = 1.0 / std::sqrt(norm_inv_sq); // C_L with unit L2 norm
    tm.normalization = n_phys * std::sqrt(L);           // dimensionless
    tm.a_c = n_phys * std::sqrt(0.5 * L) * a.ai;
    tm.a_s = n_phys * std::sqrt(0.5 * L) * s_coef;
    tm.wavenumber = k;
    tm.frequency =
        (model.mu0 + hbar * hbar * k * k / (2.0 * model.mass)) / hbar;
    return tm;
}

Mode sample_trapezoid_mode(const TrapezoidModel& model, const TrapezoidMode& tm,
                           std::size_t samples, double padding) {
    Mode m;
    m.index = tm.index;
    m.wavenumber = tm.wavenumber;
    m.frequency = tm.frequency;
    m.sigma = 1.0;
    m.alpha = 1.0;
    m.beta = 0.0;
    m.regime = ModeRegime::Numerical;
    const double L = model.length;
    const double half = 0.5 * padding * L;
    m.z0 = -half;
    m.dz = 2.0 * half / static_cast<double>(samples - 1);
    m.u.resize(samples);
    m.v.assign(samples, 0.0);

    const double acbrt = std::cbrt(model.a_scale);
    const double c_l = tm.normalization / std::sqrt(L);
    const double cos_amp = tm.a_c * std::sqrt(2.0 / L);
    const double sin_amp = tm.a_s * std::sqrt(2.0 / L);
    for (std::size_t j = 0; j < samples; ++j) {
        const double z = m.z0 + m.dz * static_cast<double>(j);
        double val = 0.0;
        if (z < -0.5 * L) {
            const double arg = -acbrt * (z + 0.5 * L) - tm.scaled_energy;
            val = arg > 20.0 ? 0.0 : c_l * airy(arg).ai;
        } else if (z > 0.5 * L) {
            const double arg = acbrt * (z - 0.5 * L) - tm.scaled_energy;
            val = arg > 20.0 ? 0.0 : c_l * tm.c_r * airy(arg).ai;
        } else {
            const double x = tm.wavenumber * (z + 0.5 * L);
            val = cos_amp * std::cos(x) + sin_amp * std::sin(x);
        }
        m.u[j] = val;
    }
    return m;
}

double bdg_residual(const Mode& mode, const AtomSpecies& species, const TrapConfig& trap,
                    const GroundState& ground, double exclude_margin) {
    if (!mode.sampled()) throw std::invalid_argument("mode must carry samples");
    if (mode.u.size() != ground.grid.point_count)
        throw std::invalid_argument("mode and ground state live on different grids");

    const double xi = ground.solver_xi;
    const double dz = ground.grid.spacing() * xi;
    const double mu0 = ground.scales.interaction_energy;
    const double gN = ground.scales.g_1d * trap.atom_number;
    const double mu = ground.chemical_potential;

    auto lap_u = spectral_second_derivative(mode.u, dz);
    auto lap_v = spectral_second_derivative(mode.v, dz);

    const double half_mask = 0.5 * trap.length - exclude_margin;
    double ru2 = 0.0, rv2 = 0.0, u2 = 0.0;
    for (std::size_t j = 0; j < mode.u.size(); ++j) {
        const double z = mode.z0 + mode.dz * static_cast<double>(j);
        if (std::abs(z) > half_mask) continue;
        const double v0 = ground.potential[j] * mu0;
        const double psi0 = ground.psi[j].real() / std::sqrt(xi);
        const double diag = v0 - mu + 2.0 * gN * psi0 * psi0;
        const auto hu = -hbar * hbar / (2.0 * species.mass) * lap_u[j] + diag * mode.u[j];
        const auto hv = -hbar * hbar / (2.0 * species.mass) * lap_v[j] + diag * mode.v[j];
        const auto r_u = hu + gN * psi0 * psi0 * mode.v[j] - hbar * mode.frequency * mode.u[j];
        const auto r_v = hv + gN * psi0 * psi0 * mode.u[j] + hbar * mode.frequency * mode.v[j];
        ru2 += std::norm(r_u);
        rv2 += std::norm(r_v);
        u2 += std::norm(mode.u[j]);
    }
    const double scale = hbar * mode.frequency * std::sqrt(u2 * dz);
    return std::sqrt(std::max(ru2, rv2) * dz) / scale;
}

double norm_check(const Mode& a, const Mode& b) {
    if (!a.sampled() || !b.sampled())
        throw std::invalid_argument("norm_check needs sampled modes");
    if (a.u.size() != b.u.size() || std::abs(a.dz - b.dz) > 1e-9 * a.dz ||
        std::abs(a.z0 - b.z0) > 1e-9 * std::abs(a.dz))
        throw std::invalid_argument("modes live on different grids");
    std::vector<std::complex<double>> integrand(a.u.size());
    for (std::size_t j = 0; j < a.u.size(); ++j)
        integrand[j] = std::conj(a.u[j]) * b.u[j] - std::conj(a.v[j]) * b.v[j];
    return integrate(integrand, a.dz, /*periodic=*/false).real();
}

} // namespace qpom
