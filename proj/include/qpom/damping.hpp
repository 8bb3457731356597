#ifndef QPOM_DAMPING_HPP
#define QPOM_DAMPING_HPP

#include <string>
#include <vector>

#include "qpom/params.hpp"

namespace qpom {

struct DampingReport {
    double gamma_sc_1d;       // 1/s
    double gamma_3b;          // 1/s
    double protocol_duration; // s
    double margin_sc;         // rate * duration
    double margin_3b;
    bool flagged; // any margin above the threshold
    double flag_threshold;
};

// Fourth-order scattering rate of high-energy quasiparticles in a 1D
// quasi-condensate: 72 sqrt(3) (ln 4/3)^2 omega_perp (rho_1d a_sc^2 / a_perp)^2.
double gamma_sc_1d(const DerivedScales& scales, const AtomSpecies& species,
                   const TrapConfig& trap);

// Three-body loss rate 3 D rho0^2.
double gamma_three_body(const AtomSpecies& species, double peak_density);

// Loss-budget check: rate * duration margins, flagged above the threshold.
DampingReport damping_budget(double protocol_duration, double rate_sc, double rate_3b,
                             double flag_threshold = 0.5);

} // namespace qpom

#endif
