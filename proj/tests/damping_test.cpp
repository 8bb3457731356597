#include <doctest.h>

#include <stdexcept>

#include "qpom/damping.hpp"
#include "test_fixtures.hpp"

using namespace qpom;
using qpom::testing::paper_trap;
using qpom::testing::rb87;

TEST_CASE("1D scattering rate for the worked example") {
    const auto species = rb87();
    const auto trap = paper_trap();
    const auto scales = derive_scales(species, trap);
    const double rate = gamma_sc_1d(scales, species, trap);
    CHECK(rate == doctest::Approx(0.5).epsilon(0.5));

    // quadratic in the line density
    auto denser = trap;
    denser.atom_number *= 2.0;
    const auto scales2 = derive_scales(species, denser);
    CHECK(gamma_sc_1d(scales2, species, denser) ==
          doctest::Approx(4.0 * rate).epsilon(1e-12));

    auto boxy = trap;
    boxy.transverse_trap_frequency.reset();
    boxy.effective_area = 5e-14;
    const auto scales3 = derive_scales(species, boxy);
    CHECK_THROWS_AS(gamma_sc_1d(scales3, species, boxy), std::invalid_argument);
}

TEST_CASE("three-body rates for rubidium and ytterbium") {
    const auto rb = rb87();
    CHECK(gamma_three_body(rb, 1e20) == doctest::Approx(0.2).epsilon(0.201));
    CHECK(gamma_three_body(rb, 0.0) == 0.0);

    AtomSpecies yb = rb;
    yb.three_body_constant = 4.0e-42;
    CHECK(gamma_three_body(yb, 1e20) == doctest::Approx(0.1).epsilon(0.201));

    // quadratic in the density
    CHECK(gamma_three_body(rb, 2e20) ==
          doctest::Approx(4.0 * gamma_three_body(rb, 1e20)).epsilon(1e-12));
}

TEST_CASE("damping budget margins and flags") {
    const auto half_second = damping_budget(0.5, 0.5, 0.174);
    CHECK(half_second.margin_sc == doctest::Approx(0.25));
    CHECK_FALSE(half_second.flagged);

    const auto idle = damping_budget(0.0, 0.5, 0.2);
    CHECK(idle.margin_sc == 0.0);
    CHECK(idle.margin_3b == 0.0);
    CHECK_FALSE(idle.flagged);

    const auto slow = damping_budget(2.0, 0.5, 0.2);
    CHECK(slow.margin_sc == doctest::Approx(1.0));
    CHECK(slow.flagged);

    CHECK_THROWS_AS(damping_budget(-1.0, 0.5, 0.2), std::invalid_argument);
}
