#ifndef QPOM_GRID_HPP
#define QPOM_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qpom {

// Uniform periodic grid for the dimensionless solver (lengths in units of
// the solver healing length xi).
struct Grid1D {
    std::size_t point_count;  // J, power of two, >= 256
    double domain_length;     // L_g in units of xi

    Grid1D(std::size_t points, double length);

    double spacing() const { return domain_length / static_cast<double>(point_count); }
    // z_j = -L_g/2 + j*dz, j = 0..J-1
    double point(std::size_t j) const {
        return -0.5 * domain_length + spacing() * static_cast<double>(j);
    }
    std::vector<double> points() const;
    // FFT-ordered wavenumbers 2*pi*m/L_g, m = 0..J/2-1, -J/2..-1
    std::vector<double> wavenumbers() const;
};

// Thin FFTW wrapper owning plans and buffers for one transform size.
class Fft1D {
public:
    explicit Fft1D(std::size_t size);
    ~Fft1D();
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    void forward(std::vector<std::complex<double>>& data) const;  // in place
    void inverse(std::vector<std::complex<double>>& data) const;  // in place, 1/N scaled
    std::size_t size() const { return size_; }

private:
    std::size_t size_;
    void* plan_fwd_;
    void* plan_bwd_;
    std::complex<double>* buffer_;
};

// Trapezoid quadrature on a uniform grid; periodic=true treats the samples
// as one full period (plain Riemann sum), otherwise endpoint weights are 1/2.
double integrate(const std::vector<double>& values, double dz, bool periodic = true);
std::complex<double> integrate(const std::vector<std::complex<double>>& values, double dz,
                               bool periodic = true);

// Spectral second derivative of periodic samples.
std::vector<std::complex<double>> spectral_second_derivative(
    const std::vector<std::complex<double>>& values, double dz);

} // namespace qpom

#endif
