#include "qpom/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

using namespace constants;

double CavityDrive::coupling_sum() const {
    if (lines.empty()) throw std::invalid_argument("drive needs at least one line");
    double sum = 0.0;
    for (const auto& l : lines) {
        if (l.detuning == 0.0) throw std::invalid_argument("line detuning must be nonzero");
        CavityConfig c = cavity;
        c.atomic_detuning = l.detuning;
        const double g0 = rabi_frequency(c, l.line);
        sum += g0 * g0 / l.detuning;
    }
    return sum;
}

double CavityDrive::cavity_wavenumber() const {
    if (commensurate_index > 0)
        return static_cast<double>(commensurate_index) * pi / (2.0 * half_length);
    if (lines.empty()) throw std::invalid_argument("drive needs at least one line");
    const double nu = lines.front().line.transition_frequency +
                      lines.front().detuning / two_pi;
    return two_pi * nu / speed_of_light;
}

CondensateProfile profile_from_ground(const GroundState& ground, double atom_number) {
    CondensateProfile p;
    const double xi = ground.solver_xi;
    p.z0 = ground.grid.point(0) * xi;
    p.dz = ground.grid.spacing() * xi;
    p.atom_number = atom_number;
    p.psi0.resize(ground.grid.point_count);
    for (std::size_t j = 0; j < p.psi0.size(); ++j)
        p.psi0[j] = ground.psi[j].real() / std::sqrt(xi);
    return p;
}

CondensateProfile box_profile(const TrapConfig& trap, double z0, double dz,
                              std::size_t count) {
    CondensateProfile p;
    p.z0 = z0;
    p.dz = dz;
    p.atom_number = trap.atom_number;
    p.psi0.resize(count);
    const double val = 1.0 / std::sqrt(trap.length);
    for (std::size_t j = 0; j < count; ++j) {
        const double z = z0 + dz * static_cast<double>(j);
        p.psi0[j] = std::abs(z) <= 0.5 * trap.length * (1.0 + 1e-12) ? val : 0.0;
    }
    return p;
}

namespace {

double profile_integral(const CondensateProfile& profile,
                        const std::vector<double>& weight) {
    std::vector<double> integrand(profile.psi0.size());
    for (std::size_t j = 0; j < integrand.size(); ++j)
        integrand[j] = profile.psi0[j] * profile.psi0[j] * weight[j];
    return integrate(integrand, profile.dz, /*periodic=*/false);
}

} // namespace

PotentialDrive oscillating_potential(const CavityDrive& drive,
                                     const CondensateProfile& profile) {
    drive.drive.validate();
    PotentialDrive p{};
    p.kind = DriveKind::CavityIntensity;
    p.z0 = profile.z0;
    p.dz = profile.dz;
    p.modulation_frequency = drive.drive.modulation_frequency;
    p.rwa_factor = {0.5, 0.0}; // cos(omega_m t) modulation
    const double k_cav = drive.cavity_wavenumber();
    const double scale = hbar * drive.coupling_sum() * drive.drive.mean_photon_number *
                         drive.drive.modulation_amplitude;
    // Trap center sits at z = 0; the mode function phase is referenced to the
    // left wall as sin(k_cav (z + L/2)). The wall position enters only through
    // f^2, reconstructed from the profile grid via the stored z samples.
    p.v_osc.resize(profile.psi0.size());
    for (std::size_t j = 0; j < p.v_osc.size(); ++j) {
        const double z = p.z0 + p.dz * static_cast<double>(j);
        const double f = std::sin(k_cav * (z + drive.half_length));
        p.v_osc[j] = scale * f * f;
    }
    p.delta_mu_osc = profile_integral(profile, p.v_osc);
    return p;
}

PotentialDrive oscillating_potential(const ForceGradientDrive& drive,
                                     const CondensateProfile& profile) {
    PotentialDrive p{};
    p.kind = DriveKind::ForceGradient;
    p.z0 = profile.z0;
    p.dz = profile.dz;
    p.modulation_frequency = drive.frequency;
    p.rwa_factor = {0.0, -0.5}; // sin(Omega t) modulation
    p.v_osc.resize(profile.psi0.size());
    for (std::size_t j = 0; j < p.v_osc.size(); ++j) {
        const double z = p.z0 + p.dz * static_cast<double>(j);
        p.v_osc[j] = -drive.gradient * z * z;
    }
    p.delta_mu_osc = profile_integral(profile, p.v_osc);
    return p;
}

std::complex<double> DrivingCoefficients::pair_m(int n_idx, int l_idx) const {
    auto it_n = std::find(mode_indices.begin(), mode_indices.end(), n_idx);
    auto it_l = std::find(mode_indices.begin(), mode_indices.end(), l_idx);
    if (it_n == mode_indices.end() || it_l == mode_indices.end())
        throw std::invalid_argument("mode not in coefficient table");
    return m[it_n - mode_indices.begin()][it_l - mode_indices.begin()];
}

std::complex<double> DrivingCoefficients::pair_l(int n_idx, int l_idx) const {
    auto it_n = std::find(mode_indices.begin(), mode_indices.end(), n_idx);
    auto it_l = std::find(mode_indices.begin(), mode_indices.end(), l_idx);
    if (it_n == mode_indices.end() || it_l == mode_indices.end())
        throw std::invalid_argument("mode not in coefficient table");
    return l[it_n - mode_indices.begin()][it_l - mode_indices.begin()];
}

DrivingCoefficients generic_coefficients(const PotentialDrive& pdrive,
                                         const std::vector<Mode>& modes,
                                         const CondensateProfile& profile) {
    const std::size_t count = profile.psi0.size();
    if (pdrive.v_osc.size() != count)
        throw std::invalid_argument("drive and profile grids differ");
    for (const auto& m : modes) {
        if (!m.sampled() || m.u.size() != count ||
            std::abs(m.dz - profile.dz) > 1e-9 * profile.dz ||
            std::abs(m.z0 - profile.z0) > 1e-9 * profile.dz)
            throw std::invalid_argument("mode grid does not match the drive grid");
    }

    // Effective weight W(z) = (v_osc - delta_mu) * rwa_factor.
    std::vector<double> w(count);
    for (std::size_t j = 0; j < count; ++j)
        w[j] = pdrive.v_osc[j] - pdrive.delta_mu_osc;

    DrivingCoefficients out;
    out.provenance = CoefficientProvenance::GenericQuadrature;
    const std::size_t nm = modes.size();
    out.mode_indices.resize(nm);
    out.p.resize(nm);
    out.o.resize(nm);
    out.n.resize(nm);
    out.m.assign(nm, std::vector<std::complex<double>>(nm, 0.0));
    out.l.assign(nm, std::vector<std::complex<double>>(nm, 0.0));

    const double sqrt_n0 = std::sqrt(profile.atom_number);
    std::vector<std::complex<double>> integrand(count);
    for (std::size_t a = 0; a < nm; ++a) {
        out.mode_indices[a] = modes[a].index;
        for (std::size_t j = 0; j < count; ++j)
            integrand[j] = w[j] * profile.psi0[j] *
                           (std::conj(modes[a].u[j]) + modes[a].v[j]);
        out.p[a] = pdrive.rwa_factor * sqrt_n0 * integrate(integrand, profile.dz, false);

        for (std::size_t j = 0; j < count; ++j)
            integrand[j] = w[j] * (std::norm(modes[a].u[j]) + std::norm(modes[a].v[j]));
        out.o[a] = pdrive.rwa_factor * integrate(integrand, profile.dz, false);

        for (std::size_t j = 0; j < count; ++j)
            integrand[j] = w[j] * std::conj(modes[a].u[j]) * std::conj(modes[a].v[j]);
        out.n[a] = pdrive.rwa_factor * integrate(integrand, profile.dz, false);

        for (std::size_t b = 0; b < a; ++b) {
            for (std::size_t j = 0; j < count; ++j)
                integrand[j] = w[j] * (std::conj(modes[a].u[j]) * modes[b].u[j] +
                                       std::conj(modes[a].v[j]) * modes[b].v[j]);
            out.m[a][b] = pdrive.rwa_factor * integrate(integrand, profile.dz, false);
            out.m[b][a] = std::conj(out.m[a][b]);

            for (std::size_t j = 0; j < count; ++j)
                integrand[j] = w[j] * (modes[a].u[j] * modes[b].v[j] +
                                       modes[a].v[j] * modes[b].u[j]);
            out.l[a][b] = pdrive.rwa_factor * integrate(integrand, profile.dz, false);
            out.l[b][a] = out.l[a][b];
        }
    }
    return out;
}

DrivingCoefficients box_coefficients(const CavityDrive& drive,
                                     const std::vector<Mode>& modes,
                                     double atom_number, int n_cav) {
    drive.drive.validate();
    const double eta = drive.drive.modulation_amplitude;
    const double kappa_bar =
        hbar * drive.coupling_sum() * drive.drive.mean_photon_number / 4.0;

    DrivingCoefficients out;
    out.provenance = CoefficientProvenance::BoxClosedForm;
    const std::size_t nm = modes.size();
    out.mode_indices.resize(nm);
    out.p.assign(nm, 0.0);
    out.o.assign(nm, 0.0);
    out.n.assign(nm, 0.0);
    out.m.assign(nm, std::vector<std::complex<double>>(nm, 0.0));
    out.l.assign(nm, std::vector<std::complex<double>>(nm, 0.0));

    for (std::size_t a = 0; a < nm; ++a) {
        const auto& mode = modes[a];
        out.mode_indices[a] = mode.index;
        const double sigma = mode.sigma;
        if (mode.index == 2 * n_cav)
            out.p[a] = -(eta / 2.0) / sigma * kappa_bar * std::sqrt(2.0 * atom_number);
        if (mode.index == n_cav) {
            out.n[a] = -(eta / 8.0) * (1.0 / (sigma * sigma) - sigma * sigma) * kappa_bar;
            out.o[a] = -(eta / 4.0) * (1.0 / (sigma * sigma) + sigma * sigma) * kappa_bar;
        }
        for (std::size_t b = 0; b < a; ++b) {
            const auto& other = modes[b];
            const int diff = mode.index - other.index;
            const int sum = mode.index + other.index;
            if (diff != 2 * n_cav && sum != 2 * n_cav) continue;
            const double ss = sigma * other.sigma;
            out.m[a][b] = -(eta / 4.0) * (1.0 / ss + ss) * kappa_bar;
            out.m[b][a] = std::conj(out.m[a][b]);
            out.l[a][b] = -(eta / 4.0) * (1.0 / ss - ss) * kappa_bar;
            out.l[b][a] = out.l[a][b];
        }
    }
    return out;
}

BackAction kappa_box(const CavityDrive& drive, const Mode& mode, double atom_number,
                     int n_cav) {
    BackAction b{};
    b.kappa_bar = hbar * drive.coupling_sum() * drive.drive.mean_photon_number / 4.0;
    b.theta = 0.0;
    if (mode.index != 2 * n_cav) {
        b.kappa = 0.0;
        return b;
    }
    b.kappa = -hbar * drive.coupling_sum() *
              std::sqrt(atom_number * drive.drive.mean_photon_number) /
              (2.0 * std::sqrt(2.0) * mode.sigma);
    return b;
}

BackAction kappa_generic(const CavityDrive& drive, const Mode& mode,
                         const CondensateProfile& profile) {
    if (!mode.sampled() || mode.u.size() != profile.psi0.size())
        throw std::invalid_argument("mode and profile grids differ");
    const double k_cav = drive.cavity_wavenumber();
    std::vector<std::complex<double>> integrand(profile.psi0.size());
    for (std::size_t j = 0; j < integrand.size(); ++j) {
        const double z = profile.z0 + profile.dz * static_cast<double>(j);
        const double f = std::sin(k_cav * (z + drive.half_length));
        integrand[j] = f * f * profile.psi0[j] * (std::conj(mode.u[j]) + mode.v[j]);
    }
    const auto overlap = integrate(integrand, profile.dz, false);
    const auto value = hbar * drive.coupling_sum() *
                       std::sqrt(profile.atom_number * drive.drive.mean_photon_number) *
                       overlap;
    BackAction b{};
    b.kappa_bar = hbar * drive.coupling_sum() * drive.drive.mean_photon_number / 4.0;
    b.kappa = std::abs(value);
    b.theta = std::arg(value);
    // Keep kappa signed along the real axis when theta is 0 or pi, matching
    // the closed form's sign convention.
    if (std::abs(value.imag()) < 1e-12 * std::abs(value.real())) {
        b.kappa = value.real();
        b.theta = 0.0;
    }
    return b;
}

ResonanceReport resonance_audit(double omega_m, const std::vector<Mode>& modes,
                                const AtomSpecies& species, const TrapConfig& trap,
                                const DerivedScales& scales, int n_cav,
                                double tol_rel) {
    ResonanceReport report{omega_m, {}};
    if (modes.empty()) return report;
    const double tol = tol_rel * std::max(omega_m, modes.front().frequency);

    auto p_resonant = [&](double freq) { return std::abs(freq - omega_m) <= tol; };

    for (std::size_t a = 0; a < modes.size(); ++a) {
        const auto& n = modes[a];
        if (p_resonant(n.frequency))
            report.resonant.push_back({'P', n.index, 0, n.frequency - omega_m, false, 0});
        if (std::abs(2.0 * n.frequency - omega_m) <= tol)
            report.resonant.push_back({'N', n.index, 0, 2.0 * n.frequency - omega_m,
                                       false, 0});
        for (std::size_t b = 0; b < a; ++b) {
            const auto& l = modes[b];
            const double det_m = n.frequency - l.frequency - omega_m;
            if (std::abs(det_m) <= tol) {
                ResonantProcess proc{'M', n.index, l.index, det_m, false, 0};
                const int third = n.index - l.index;
                if (third == 2 * n_cav) {
                    const auto d3 = dispersion(third, species, trap, scales);
                    if (p_resonant(d3.frequency)) {
                        proc.hazard = true;
                        proc.hazard_mode = third;
                    }
                }
                report.resonant.push_back(proc);
            }
            const double det_l = n.frequency + l.frequency - omega_m;
            if (std::abs(det_l) <= tol) {
                ResonantProcess proc{'L', n.index, l.index, det_l, false, 0};
                const int third = n.index + l.index;
                if (third == 2 * n_cav) {
                    const auto d3 = dispersion(third, species, trap, scales);
                    if (p_resonant(d3.frequency)) {
                        proc.hazard = true;
                        proc.hazard_mode = third;
                    }
                }
                report.resonant.push_back(proc);
            }
        }
    }
    return report;
}

BudgetReport drive_budget(BudgetTarget target, double quasiparticle_number,
                          double duration, const CavityDrive& drive,
                          const Mode& mode_n, const Mode& mode_l, double atom_number,
                          const DerivedScales& scales) {
    if (!(duration > 0.0)) throw std::invalid_argument("budget duration must be positive");
    const double eta = drive.drive.modulation_amplitude > 0.0
                           ? drive.drive.modulation_amplitude
                           : 1.0;
    const double coupling = std::abs(drive.coupling_sum());

    BudgetReport r{};
    r.target = target;
    r.duration = duration;
    switch (target) {
    case BudgetTarget::Displace: {
        // |P| t / hbar = sqrt(N_qp) with |P| = eta hbar |sum g^2/D| N_ph
        //   sqrt(2 N0) / (8 sigma)
        r.photon_number = 8.0 * std::sqrt(quasiparticle_number) * mode_n.sigma /
                          (eta * duration * std::sqrt(2.0 * atom_number) * coupling);
        break;
    }
    case BudgetTarget::Swap:
    case BudgetTarget::BeamSplit: {
        const double angle = target == BudgetTarget::Swap ? 0.5 * pi : 0.25 * pi;
        const double ss = mode_n.sigma * mode_l.sigma;
        const double c_sigma = 1.0 / ss + ss;
        // |M| t / hbar = angle with |M| = eta c_sigma hbar |sum g^2/D| N_ph / 16
        r.photon_number = 16.0 * angle / (eta * duration * c_sigma * coupling);
        break;
    }
    }
    r.max_dv_over_mu0 =
        hbar * coupling * r.photon_number / scales.interaction_energy;
    r.perturbative_warning = r.max_dv_over_mu0 > 0.1;
    return r;
}

} // namespace qpom
