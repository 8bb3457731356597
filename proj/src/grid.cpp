#include "qpom/grid.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

#include "qpom/constants.hpp"

namespace qpom {

namespace {
// FFTW planning is not thread safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
} // namespace

Grid1D::Grid1D(std::size_t points, double length)
    : point_count(points), domain_length(length) {
    if (!is_power_of_two(points) || points < 256)
        throw std::invalid_argument("grid point count must be a power of two >= 256");
    if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
}

std::vector<double> Grid1D::points() const {
    std::vector<double> z(point_count);
    for (std::size_t j = 0; j < point_count; ++j) z[j] = point(j);
    return z;
}

std::vector<double> Grid1D::wavenumbers() const {
    const auto n = point_count;
    std::vector<double> k(n);
    const double dk = constants::two_pi / domain_length;
    for (std::size_t j = 0; j < n; ++j) {
        const auto m = (j < n / 2) ? static_cast<long>(j)
                                   : static_cast<long>(j) - static_cast<long>(n);
        k[j] = dk * static_cast<double>(m);
    }
    return k;
}

Fft1D::Fft1D(std::size_t size) : size_(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    buffer_ = reinterpret_cast<std::complex<double>*>(
        fftw_malloc(sizeof(fftw_complex) * size));
    if (!buffer_) throw std::bad_alloc();
    auto* b = reinterpret_cast<fftw_complex*>(buffer_);
    // FFTW_ESTIMATE keeps planning deterministic and cheap.
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(size), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(size), b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft1D::~Fft1D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buffer_);
}

void Fft1D::forward(std::vector<std::complex<double>>& data) const {
    if (data.size() != size_) throw std::invalid_argument("FFT size mismatch");
    std::copy(data.begin(), data.end(), buffer_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::copy(buffer_, buffer_ + size_, data.begin());
}

void Fft1D::inverse(std::vector<std::complex<double>>& data) const {
    if (data.size() != size_) throw std::invalid_argument("FFT size mismatch");
    std::copy(data.begin(), data.end(), buffer_);
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / static_cast<double>(size_);
    for (std::size_t j = 0; j < size_; ++j) data[j] = buffer_[j] * scale;
}

double integrate(const std::vector<double>& values, double dz, bool periodic) {
    double sum = 0.0;
    for (double v : values) sum += v;
    if (!periodic && values.size() > 1)
        sum -= 0.5 * (values.front() + values.back());
    return sum * dz;
}

std::complex<double> integrate(const std::vector<std::complex<double>>& values, double dz,
                               bool periodic) {
    std::complex<double> sum = 0.0;
    for (const auto& v : values) sum += v;
    if (!periodic && values.size() > 1)
        sum -= 0.5 * (values.front() + values.back());
    return sum * dz;
}

std::vector<std::complex<double>> spectral_second_derivative(
    const std::vector<std::complex<double>>& values, double dz) {
    const std::size_t n = values.size();
    Fft1D fft(n);
    const double dk = constants::two_pi / (dz * static_cast<double>(n));
    auto work = values;
    fft.forward(work);
    for (std::size_t j = 0; j < n; ++j) {
        const auto m = (j < n / 2) ? static_cast<long>(j)
                                   : static_cast<long>(j) - static_cast<long>(n);
        const double k = dk * static_cast<double>(m);
        work[j] *= -k * k;
    }
    fft.inverse(work);
    return work;
}

} // namespace qpom
