#include "qpom/damping.hpp"

#include <cmath>
#include <stdexcept>

namespace qpom {

double gamma_sc_1d(const DerivedScales& scales, const AtomSpecies& species,
                   const TrapConfig& trap) {
    if (!trap.transverse_trap_frequency)
        throw std::invalid_argument("gamma_sc_1d needs a harmonic transverse trap");
    const double ln43 = std::log(4.0 / 3.0);
    const double ratio = scales.line_density * species.scattering_length *
                         species.scattering_length / scales.transverse_length;
    return 72.0 * std::sqrt(3.0) * ln43 * ln43 * *trap.transverse_trap_frequency *
           ratio * ratio;
}

double gamma_three_body(const AtomSpecies& species, double peak_density) {
    if (peak_density < 0.0) throw std::invalid_argument("density must be nonnegative");
    return 3.0 * species.three_body_constant * peak_density * peak_density;
}

DampingReport damping_budget(double protocol_duration, double rate_sc, double rate_3b,
                             double flag_threshold) {
    if (protocol_duration < 0.0 || rate_sc < 0.0 || rate_3b < 0.0)
        throw std::invalid_argument("durations and rates must be nonnegative");
    DampingReport r{};
    r.gamma_sc_1d = rate_sc;
    r.gamma_3b = rate_3b;
    r.protocol_duration = protocol_duration;
    r.margin_sc = rate_sc * protocol_duration;
    r.margin_3b = rate_3b * protocol_duration;
    r.flag_threshold = flag_threshold;
    r.flagged = r.margin_sc > flag_threshold || r.margin_3b > flag_threshold;
    return r;
}

} // namespace qpom
