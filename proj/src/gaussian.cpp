#include "qpom/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qpom {

GaussianState GaussianState::vacuum(std::vector<int> ids) {
    GaussianState s;
    s.mode_ids = std::move(ids);
    const int m = s.mode_count();
    s.d = Eigen::VectorXd::Zero(2 * m);
    s.sigma = Eigen::MatrixXd::Identity(2 * m, 2 * m);
    return s;
}

int GaussianState::slot(int mode_id) const {
    for (int i = 0; i < mode_count(); ++i)
        if (mode_ids[i] == mode_id) return i;
    throw std::invalid_argument("mode " + std::to_string(mode_id) + " not in state");
}

std::complex<double> GaussianState::coherent_amplitude(int mode_id) const {
    const int i = slot(mode_id);
    return {0.5 * d(2 * i), 0.5 * d(2 * i + 1)};
}

double GaussianState::mean_number(int mode_id) const {
    const int i = slot(mode_id);
    const double dx = d(2 * i), dp = d(2 * i + 1);
    return (sigma(2 * i, 2 * i) + sigma(2 * i + 1, 2 * i + 1) + dx * dx + dp * dp - 2.0) /
           4.0;
}

double GaussianState::total_mean_number() const {
    double sum = 0.0;
    for (int id : mode_ids) sum += mean_number(id);
    return sum;
}

bool GaussianState::is_physical(double tolerance) const {
    const int n = static_cast<int>(d.size());
    Eigen::MatrixXcd m = sigma.cast<std::complex<double>>();
    const auto omega = symplectic_form(mode_count());
    m += std::complex<double>(0.0, 1.0) * omega.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues().minCoeff() > -tolerance && n == sigma.rows();
}

void GaussianState::apply_symplectic(const Eigen::MatrixXd& s) {
    d = s * d;
    sigma = s * sigma * s.transpose();
}

Eigen::MatrixXd symplectic_form(int mode_count) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * mode_count, 2 * mode_count);
    for (int i = 0; i < mode_count; ++i) {
        omega(2 * i, 2 * i + 1) = 1.0;
        omega(2 * i + 1, 2 * i) = -1.0;
    }
    return omega;
}

namespace {

// Real 2x2 block of the quadrature map for b' = A b + B b^dag.
Eigen::Matrix2d quadrature_block(std::complex<double> a, std::complex<double> b) {
    Eigen::Matrix2d s;
    s << (a + b).real(), (b - a).imag(), (a + b).imag(), (a - b).real();
    return s;
}

} // namespace

GaussianState apply_beam_splitter(const GaussianState& state, int mode_n, int mode_l,
                                  std::complex<double> m_param) {
    const int i = state.slot(mode_n), j = state.slot(mode_l);
    if (i == j) throw std::invalid_argument("beam splitter needs two distinct modes");
    const double mag = std::abs(m_param);
    const std::complex<double> phase =
        mag > 0.0 ? m_param / mag : std::complex<double>(1.0, 0.0);
    const double c = std::cos(mag), s = std::sin(mag);
    // b_n -> cos b_n + i e^{i theta} sin b_l, b_l -> cos b_l + i e^{-i theta} sin b_n
    const std::complex<double> im(0.0, 1.0);
    Eigen::MatrixXd sp = Eigen::MatrixXd::Identity(state.d.size(), state.d.size());
    sp.block<2, 2>(2 * i, 2 * i) = quadrature_block(c, 0.0);
    sp.block<2, 2>(2 * i, 2 * j) = quadrature_block(im * phase * s, 0.0);
    sp.block<2, 2>(2 * j, 2 * j) = quadrature_block(c, 0.0);
    sp.block<2, 2>(2 * j, 2 * i) = quadrature_block(im * std::conj(phase) * s, 0.0);
    GaussianState out = state;
    out.apply_symplectic(sp);
    return out;
}

GaussianState apply_displacement(const GaussianState& state, int mode_n,
                                 std::complex<double> p_param) {
    const int i = state.slot(mode_n);
    GaussianState out = state;
    const std::complex<double> shift = std::complex<double>(0.0, 1.0) * std::conj(p_param);
    out.d(2 * i) += 2.0 * shift.real();
    out.d(2 * i + 1) += 2.0 * shift.imag();
    return out;
}

GaussianState apply_squeeze_single(const GaussianState& state, int mode_n,
                                   std::complex<double> n_param) {
    const int i = state.slot(mode_n);
    const double r = std::abs(n_param);
    const std::complex<double> phase =
        r > 0.0 ? n_param / r : std::complex<double>(1.0, 0.0);
    const std::complex<double> im(0.0, 1.0);
    Eigen::MatrixXd sp = Eigen::MatrixXd::Identity(state.d.size(), state.d.size());
    sp.block<2, 2>(2 * i, 2 * i) =
        quadrature_block(std::cosh(r), im * phase * std::sinh(r));
    GaussianState out = state;
    out.apply_symplectic(sp);
    return out;
}

GaussianState apply_squeeze_two(const GaussianState& state, int mode_n, int mode_l,
                                std::complex<double> l_param) {
    const int i = state.slot(mode_n), j = state.slot(mode_l);
    if (i == j) throw std::invalid_argument("two-mode squeeze needs two distinct modes");
    const double r = std::abs(l_param);
    const std::complex<double> phase =
        r > 0.0 ? l_param / r : std::complex<double>(1.0, 0.0);
    const std::complex<double> im(0.0, 1.0);
    // b_n -> cosh b_n + i e^{-i theta} sinh b_l^dag (and n <-> l symmetric)
    Eigen::MatrixXd sp = Eigen::MatrixXd::Identity(state.d.size(), state.d.size());
    sp.block<2, 2>(2 * i, 2 * i) = quadrature_block(std::cosh(r), 0.0);
    sp.block<2, 2>(2 * i, 2 * j) =
        quadrature_block(0.0, im * std::conj(phase) * std::sinh(r));
    sp.block<2, 2>(2 * j, 2 * j) = quadrature_block(std::cosh(r), 0.0);
    sp.block<2, 2>(2 * j, 2 * i) =
        quadrature_block(0.0, im * std::conj(phase) * std::sinh(r));
    GaussianState out = state;
    out.apply_symplectic(sp);
    return out;
}

GaussianState apply_free_phase(const GaussianState& state, int mode_n, double theta) {
    const int i = state.slot(mode_n);
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, -theta));
    Eigen::MatrixXd sp = Eigen::MatrixXd::Identity(state.d.size(), state.d.size());
    sp.block<2, 2>(2 * i, 2 * i) = quadrature_block(rot, 0.0);
    GaussianState out = state;
    out.apply_symplectic(sp);
    return out;
}

GaussianState apply_operation(const GaussianState& state, const OperationSpec& op) {
    switch (op.kind) {
    case OpKind::BeamSplit:
        return apply_beam_splitter(state, op.mode_n, op.mode_l, op.parameter);
    case OpKind::Displace:
        return apply_displacement(state, op.mode_n, op.parameter);
    case OpKind::Squeeze1:
        return apply_squeeze_single(state, op.mode_n, op.parameter);
    case OpKind::Squeeze2:
        return apply_squeeze_two(state, op.mode_n, op.mode_l, op.parameter);
    case OpKind::FreePhase:
        return apply_free_phase(state, op.mode_n, op.parameter.real());
    }
    throw std::logic_error("unknown operation kind");
}

ProtocolResult protocol_run(const std::vector<OperationSpec>& sequence,
                            const GaussianState& initial) {
    ProtocolResult result{};
    result.total_duration = 0.0;
    GaussianState current = initial;
    for (const auto& op : sequence) {
        current = apply_operation(current, op);
        result.total_duration += op.duration;
        result.trajectory.push_back({op, current});
        if (!current.is_physical())
            result.warnings.push_back("state lost physicality after a step");
    }
    return result;
}

MziResult mzi_run(std::complex<double> coherent_amplitude, double theta, int probe_mode,
                  int reference_mode) {
    auto state = GaussianState::vacuum({probe_mode, reference_mode});
    // Prepare the coherent probe: i P* = alpha requires P = -i conj(alpha).
    const std::complex<double> p_param =
        std::complex<double>(0.0, -1.0) * std::conj(coherent_amplitude);
    state = apply_displacement(state, probe_mode, p_param);

    const double quarter = 0.25 * 3.14159265358979323846;
    state = apply_beam_splitter(state, probe_mode, reference_mode, quarter);
    state = apply_free_phase(state, probe_mode, theta);
    state = apply_beam_splitter(state, probe_mode, reference_mode, quarter);

    MziResult r{};
    r.output = state;
    const double amp = std::abs(coherent_amplitude);
    r.phase_precision_bound =
        amp > 0.0 ? 1.0 / amp : std::numeric_limits<double>::infinity();
    r.signal_mean_number = state.mean_number(probe_mode);
    r.reference_mean_number = state.mean_number(reference_mode);
    return r;
}

} // namespace qpom
