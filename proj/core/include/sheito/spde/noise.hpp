#pragma once

#include "sheito/spde/grid.hpp"
#include "sheito/spde/rng.hpp"

#include <cstdint>
#include <optional>

namespace sheito {

// Space-time white noise on a TorusGrid, stored by Fourier mode: for each time cell
// [t_n, t_{n+1}) the increments dW_k = <W, e_k> over the cell, E|dW_k|^2 = dt, with modes 0 and
// M/2 real. The physical cell increments dW_{n,j} = dx * sum_k dW_k e^{2 pi i k y_j} are
// i.i.d. N(0, dt dx). Optionally also the exact Ornstein-Uhlenbeck innovations
// Z_k = int_cell e^{-lambda_k (t_{n+1} - s)} dW_k(s), jointly Gaussian with dW_k.
//
// Draws are addressed by absolute cell index round(t_n / dt), so two draws with the same seed and
// dt agree on overlapping cells regardless of their windows.
class WhiteNoiseDraw {
public:
    static WhiteNoiseDraw generate(const TorusGrid& g, std::uint64_t seed, bool with_ou = true);

    const TorusGrid& grid() const { return g_; }
    std::uint64_t seed() const { return seed_; }
    int cells() const { return g_.steps; }
    // Spectral increments, one row per cell.
    const SpectralField& increments() const { return dw_; }
    bool has_ou() const { return z_.has_value(); }
    const SpectralField& ou_innovations() const;
    // Physical cell increments dW_{n,j}; row n is the cell starting at t_n.
    GridField cells_physical() const;

    // Coupled coarse draw: sums of time_factor consecutive cells, modes truncated to M / space_factor
    // (the new Nyquist mode is sqrt(2) Re of the fine mode, preserving its variance); the OU
    // innovations are aggregated exactly. Requires steps divisible by time_factor.
    WhiteNoiseDraw coarsen(int space_factor, int time_factor) const;

private:
    TorusGrid g_;
    std::uint64_t seed_ = 0;
    SpectralField dw_;
    std::optional<SpectralField> z_;
};

// OU step coefficients for rate lambda over dt: decay e^{-lambda dt}, c = int e^{-lambda r} dr,
// v = int e^{-2 lambda r} dr.
struct OuStep {
    double decay, c, v;
    static OuStep of(double lambda, double dt);
};

} // namespace sheito
