#ifndef QPOM_GAUSSIAN_HPP
#define QPOM_GAUSSIAN_HPP

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace qpom {

// Gaussian state over an ordered set of quasiparticle modes in the basis
// X_i = b_i + b_i^dag, P_i = i(b_i^dag - b_i); vacuum is (d = 0, Sigma = I).
struct GaussianState {
    std::vector<int> mode_ids;
    Eigen::VectorXd d;      // length 2M
    Eigen::MatrixXd sigma;  // 2M x 2M

    static GaussianState vacuum(std::vector<int> ids);

    int mode_count() const { return static_cast<int>(mode_ids.size()); }
    int slot(int mode_id) const; // throws on unknown mode

    std::complex<double> coherent_amplitude(int mode_id) const; // <b>
    double mean_number(int mode_id) const;                      // <b^dag b>
    double total_mean_number() const;

    // Physicality: Sigma + i Omega_symp >= 0 (eigenvalue test).
    bool is_physical(double tolerance = 1e-9) const;

    // In-place symplectic update d -> S d, Sigma -> S Sigma S^T.
    void apply_symplectic(const Eigen::MatrixXd& s);
};

// Standard symplectic form for M modes in the (X1, P1, X2, P2, ...) order.
Eigen::MatrixXd symplectic_form(int mode_count);

// U = exp[i(M b_n^dag b_l + M* b_l^dag b_n)]: beam splitter / mode mixer;
// |M| = pi/4 splits evenly, pi/2 swaps occupations.
GaussianState apply_beam_splitter(const GaussianState& state, int mode_n, int mode_l,
                                  std::complex<double> m_param);

// U = exp[i(P b_n + P* b_n^dag)]: displacement; mean number gain |P|^2 from
// vacuum, Sigma unchanged.
GaussianState apply_displacement(const GaussianState& state, int mode_n,
                                 std::complex<double> p_param);

// U = exp[(i/2)(N (b_n^dag)^2 + N* b_n^2)]: single-mode squeeze, r = |N|.
GaussianState apply_squeeze_single(const GaussianState& state, int mode_n,
                                   std::complex<double> n_param);

// U = exp[i(L b_n b_l + L* b_n^dag b_l^dag)]: two-mode squeeze; double
// vacuum acquires mean number sinh^2|L| per mode.
GaussianState apply_squeeze_two(const GaussianState& state, int mode_n, int mode_l,
                                std::complex<double> l_param);

// Free evolution phase b -> b e^{-i theta} on one mode.
GaussianState apply_free_phase(const GaussianState& state, int mode_n, double theta);

enum class OpKind { BeamSplit, Displace, Squeeze1, Squeeze2, FreePhase };

struct OperationSpec {
    OpKind kind;
    int mode_n = 0;
    int mode_l = 0; // unused for single-mode operations
    std::complex<double> parameter;
    double duration = 0.0; // s, informational (damping budgets)
};

GaussianState apply_operation(const GaussianState& state, const OperationSpec& op);

struct ProtocolStep {
    OperationSpec op;
    GaussianState state; // state after the step
};

struct ProtocolResult {
    std::vector<ProtocolStep> trajectory;
    double total_duration;
    std::vector<std::string> warnings;
};

ProtocolResult protocol_run(const std::vector<OperationSpec>& sequence,
                            const GaussianState& initial);

struct MziResult {
    GaussianState output;
    double phase_precision_bound; // 1/|alpha|
    double signal_mean_number;    // mode that carried the probe
    double reference_mean_number;
};

// Two pi/4 beam splitters around a free phase Theta on the probe arm. The
// probe mode enters in a coherent state with the given amplitude, the
// reference mode in vacuum.
MziResult mzi_run(std::complex<double> coherent_amplitude, double theta,
                  int probe_mode = 1, int reference_mode = 2);

} // namespace qpom

#endif
