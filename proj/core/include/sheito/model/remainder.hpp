#pragma once

#include "sheito/kernels/heat.hpp"
#include "sheito/spde/grid.hpp"

#include <vector>

namespace sheito {

// Fourier coefficients of the smooth periodic remainder Rbar = P - K_per of the heat kernel on
// the torus: Rbar^(tau, k) = int_R G(tau, x) (1 - chi(tau, x)) e^{-2 pi i k x} dx (real, even in k).
// Tabulated (FFT of the periodised samples) on a uniform tau grid up to the cutoff's time extent and interpolated by cubic
// Lagrange; beyond the extent chi = 0 and Rbar^ = e^{-4 pi^2 k^2 tau} exactly.
class RemainderSpectrum {
public:
    // Keeps modes k <= max_mode whose coefficient exceeds tol somewhere.
    explicit RemainderSpectrum(int max_mode, double tol = 1e-13, double table_step = 1.0 / 2048);

    int modes() const { return static_cast<int>(table_.size()); } // modes 0..modes()-1 are nonzero
    double operator()(double tau, int k) const;
    // The same by direct quadrature (no table), for checks.
    static double direct(double tau, int k);
    double table_step() const { return h_; }

private:
    double h_, extent_;
    std::vector<std::vector<double>> table_; // [k][i] at tau = i h
};

// (Rbar * zeta)(t_n) = int_{t_origin}^{t_n} Rbar_{t_n - s} zeta_s ds per mode by the trapezoid rule,
// zeta taken as zero before row `origin`. Modes beyond spectrum.modes() are zero.
SpectralField remainder_convolution(const SpectralField& zeta, int origin, const RemainderSpectrum& spectrum);

} // namespace sheito
