#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qpom/constants.hpp"
#include "qpom/gaussian.hpp"

using namespace qpom;
using std::complex;

namespace {

// Extract the linear symplectic matrix of an operation by probing with unit
// displacement vectors (the operations are linear in the quadratures).
template <typename Op>
Eigen::MatrixXd probe_symplectic(int modes, Op&& op) {
    const auto vac = GaussianState::vacuum([&] {
        std::vector<int> ids;
        for (int i = 1; i <= modes; ++i) ids.push_back(i);
        return ids;
    }());
    const auto origin = op(vac).d;
    Eigen::MatrixXd s(2 * modes, 2 * modes);
    for (int c = 0; c < 2 * modes; ++c) {
        auto probe = vac;
        probe.d(c) = 1.0;
        s.col(c) = op(probe).d - origin;
    }
    return s;
}

} // namespace

TEST_CASE("every operation is symplectic to 1e-12") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> mag(0.0, 2.0), phase(0.0, 6.28);
    for (int trial = 0; trial < 60; ++trial) {
        const complex<double> p = std::polar(mag(rng), phase(rng));
        Eigen::MatrixXd s;
        switch (trial % 4) {
        case 0:
            s = probe_symplectic(2, [&](const GaussianState& st) {
                return apply_beam_splitter(st, 1, 2, p);
            });
            break;
        case 1:
            s = probe_symplectic(1, [&](const GaussianState& st) {
                return apply_squeeze_single(st, 1, p);
            });
            break;
        case 2:
            s = probe_symplectic(2, [&](const GaussianState& st) {
                return apply_squeeze_two(st, 1, 2, p);
            });
            break;
        default:
            s = probe_symplectic(1, [&](const GaussianState& st) {
                return apply_free_phase(st, 1, p.real());
            });
        }
        const int m = static_cast<int>(s.rows()) / 2;
        const auto omega = symplectic_form(m);
        CHECK((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("vacuum is physical, scaled-down covariance is not") {
    auto vac = GaussianState::vacuum({1, 2});
    CHECK(vac.is_physical());
    vac.sigma *= 0.5;
    CHECK_FALSE(vac.is_physical());
}

TEST_CASE("displacement sets the coherent amplitude and leaves sigma alone") {
    const auto vac = GaussianState::vacuum({1});
    const complex<double> p(1.3, -0.4);
    const auto out = apply_displacement(vac, 1, p);
    CHECK(out.mean_number(1) == doctest::Approx(std::norm(p)).epsilon(1e-12));
    CHECK((out.sigma - vac.sigma).cwiseAbs().maxCoeff() == 0.0);

    // two successive displacements add amplitudes
    const auto twice = apply_displacement(out, 1, p);
    CHECK(std::abs(twice.coherent_amplitude(1) - 2.0 * out.coherent_amplitude(1)) <
          1e-12);

    // vacuum with |P|^2 = 10 has mean number 10
    const auto ten = apply_displacement(vac, 1, std::sqrt(10.0));
    CHECK(ten.mean_number(1) == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS(apply_displacement(vac, 99, p), std::invalid_argument);
}

TEST_CASE("beam splitter: identity, half, swap") {
    const auto vac = GaussianState::vacuum({1, 2});
    const complex<double> alpha(1.7, 0.9);
    const auto in = apply_displacement(vac, 1, complex<double>(0, -1) * std::conj(alpha));
    CHECK(std::abs(in.coherent_amplitude(1) - alpha) < 1e-12);

    const auto id = apply_beam_splitter(in, 1, 2, 0.0);
    CHECK((id.d - in.d).cwiseAbs().maxCoeff() < 1e-14);

    const auto half = apply_beam_splitter(in, 1, 2, constants::pi / 4.0);
    CHECK(half.mean_number(1) == doctest::Approx(0.5 * std::norm(alpha)).epsilon(1e-12));
    CHECK(half.mean_number(2) == doctest::Approx(0.5 * std::norm(alpha)).epsilon(1e-12));

    const auto swap = apply_beam_splitter(in, 1, 2, constants::pi / 2.0);
    CHECK(swap.mean_number(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(swap.mean_number(2) == doctest::Approx(std::norm(alpha)).epsilon(1e-12));

    // passive operations conserve the total mean number
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(0.0, 1.5), ph(0.0, 6.28);
    for (int t = 0; t < 20; ++t) {
        const auto mixed =
            apply_beam_splitter(in, 1, 2, std::polar(mag(rng), ph(rng)));
        CHECK(mixed.total_mean_number() ==
              doctest::Approx(in.total_mean_number()).epsilon(1e-11));
    }
}

TEST_CASE("single-mode squeeze scales the principal variances by e^{+-2r}") {
    const auto vac = GaussianState::vacuum({1});
    CHECK((apply_squeeze_single(vac, 1, 0.0).sigma - vac.sigma).cwiseAbs().maxCoeff() <
          1e-14);
    const double r = 0.8;
    const auto out = apply_squeeze_single(vac, 1, complex<double>(0.0, r));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(out.sigma);
    CHECK(eig.eigenvalues()(0) == doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-10));
    CHECK(eig.eigenvalues()(1) == doctest::Approx(std::exp(2.0 * r)).epsilon(1e-10));
    CHECK(out.is_physical());
}

TEST_CASE("two-mode squeeze against the explicit 4x4 symplectic oracle") {
    const auto vac = GaussianState::vacuum({1, 2});
    const double r = 0.6;
    const double theta = 0.9;
    const complex<double> l_param = std::polar(r, theta);
    const auto out = apply_squeeze_two(vac, 1, 2, l_param);

    // mean numbers sinh^2 |L| each
    CHECK(out.mean_number(1) == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-12));
    CHECK(out.mean_number(2) == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-12));
    CHECK(out.is_physical());

    // independent 4x4 construction: b1 -> cosh r b1 + i e^{-i theta} sinh r b2^dag
    const double ch = std::cosh(r), sh = std::sinh(r);
    Eigen::Matrix2d eye2 = Eigen::Matrix2d::Identity() * ch;
    const complex<double> coupling = complex<double>(0.0, 1.0) * std::polar(1.0, -theta);
    Eigen::Matrix2d cross;
    // quadrature block of B b^dag with B = coupling * sh:
    // [[Re B, Im B], [Im B, -Re B]]
    cross << (coupling * sh).real(), (coupling * sh).imag(), (coupling * sh).imag(),
        -(coupling * sh).real();
    Eigen::Matrix4d s;
    s << eye2, cross, cross, eye2;
    const auto omega = symplectic_form(2);
    CHECK((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((out.sigma - s * vac.sigma * s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mzi fringe and bound") {
    const double amp = std::sqrt(10.0);
    const auto bound = mzi_run(amp, 0.5 * constants::pi);
    CHECK(bound.phase_precision_bound == doctest::Approx(1.0 / amp));
    CHECK(bound.phase_precision_bound == doctest::Approx(0.316).epsilon(0.01));

    // Theta = 0: occupations permute deterministically (full transfer)
    const auto transfer = mzi_run(amp, 0.0);
    const double total = transfer.signal_mean_number + transfer.reference_mean_number;
    CHECK(total == doctest::Approx(10.0).epsilon(1e-10));
    CHECK(std::min(transfer.signal_mean_number, transfer.reference_mean_number) <
          1e-10);

    // vacuum input stays vacuum
    const auto dark = mzi_run(0.0, 1.234);
    CHECK(dark.signal_mean_number == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dark.reference_mean_number == doctest::Approx(0.0).epsilon(1e-12));

    // fringe follows cos^2 in the accumulated phase
    const auto composed = [&](double theta) {
        auto st = GaussianState::vacuum({1, 2});
        st = apply_displacement(st, 1, complex<double>(0, -1) * amp);
        st = apply_beam_splitter(st, 1, 2, constants::pi / 4.0);
        st = apply_free_phase(st, 1, theta);
        st = apply_beam_splitter(st, 1, 2, constants::pi / 4.0);
        return st;
    };
    for (double theta : {0.0, 0.4, 1.1, 2.0, 2.9}) {
        const auto run = mzi_run(amp, theta);
        const auto manual = composed(theta);
        CHECK(run.signal_mean_number ==
              doctest::Approx(manual.mean_number(1)).epsilon(1e-12));
    }
    // fringe against the composed two-mode matrix product: with the i sin
    // splitter convention the signal occupation is N sin^2(theta/2)
    double max_err = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double theta = i * constants::two_pi / 20.0;
        const auto run = mzi_run(amp, theta);
        const double predicted = 10.0 * std::pow(std::sin(0.5 * theta), 2);
        max_err = std::max(max_err, std::abs(run.signal_mean_number - predicted));
    }
    CHECK(max_err < 1e-9);
}

TEST_CASE("protocol run: identity, swap-displace-swap, mzi equivalence") {
    const auto vac = GaussianState::vacuum({1, 2});
    CHECK(protocol_run({}, vac).trajectory.empty());

    // swap -> displace low mode -> swap transfers the displacement to mode 2
    const complex<double> p(2.0, 1.0);
    std::vector<OperationSpec> seq = {
        {OpKind::BeamSplit, 1, 2, 0.5 * constants::pi, 0.2},
        {OpKind::Displace, 1, 0, p, 0.1},
        {OpKind::BeamSplit, 1, 2, 0.5 * constants::pi, 0.2},
    };
    const auto result = protocol_run(seq, vac);
    CHECK(result.total_duration == doctest::Approx(0.5));
    const auto& last = result.trajectory.back().state;
    CHECK(last.mean_number(2) == doctest::Approx(std::norm(p)).epsilon(1e-12));
    CHECK(last.mean_number(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(result.warnings.empty());

    // the MZI as an explicit sequence reproduces mzi_run bit-identically
    const double amp = std::sqrt(10.0), theta = 0.77;
    auto prepared = apply_displacement(vac, 1, complex<double>(0, -1) * amp);
    std::vector<OperationSpec> mzi_seq = {
        {OpKind::BeamSplit, 1, 2, 0.25 * constants::pi, 0.0},
        {OpKind::FreePhase, 1, 0, theta, 0.0},
        {OpKind::BeamSplit, 1, 2, 0.25 * constants::pi, 0.0},
    };
    const auto via_protocol = protocol_run(mzi_seq, prepared);
    const auto direct = mzi_run(amp, theta);
    CHECK((via_protocol.trajectory.back().state.d - direct.output.d)
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((via_protocol.trajectory.back().state.sigma - direct.output.sigma)
              .cwiseAbs()
              .maxCoeff() == 0.0);
}
