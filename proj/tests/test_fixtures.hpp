#ifndef QPOM_TEST_FIXTURES_HPP
#define QPOM_TEST_FIXTURES_HPP

#include "qpom/params.hpp"

namespace qpom::testing {

inline AtomSpecies rb87() {
    AtomSpecies a;
    a.name = "Rb87";
    a.mass = 1.44e-25;
    a.scattering_length = 5.18e-9;
    a.lines = {{"D1", 3.77e14, 2.5e-29, hz_to_angular(6e6)},
               {"D2", 3.84e14, 3.6e-29, hz_to_angular(6e6)}};
    a.three_body_constant = 5.8e-42;
    return a;
}

inline TrapConfig paper_trap() {
    TrapConfig t;
    t.length = 200e-6;
    t.atom_number = 1000;
    t.transverse_trap_frequency = hz_to_angular(7323.4);
    return t;
}

// Same line density (hence same healing length) as the paper preset, but a
// short box (L/xi ~ 60) that solves in milliseconds.
inline TrapConfig small_trap() {
    TrapConfig t = paper_trap();
    t.length = 1.6629e-5;
    t.atom_number = t.length * 5e6;
    return t;
}

inline CavityConfig paper_cavity(double detuning) {
    CavityConfig c;
    c.cavity_length = 0.1;
    c.mode_area = 1e-6;
    c.atomic_detuning = detuning;
    return c;
}

} // namespace qpom::testing

#endif
