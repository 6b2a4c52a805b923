#include "sheito/spde/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace sheito {

namespace {
enum Stream : std::uint32_t { kIncrement = 0, kInnovation = 1 };
}

OuStep OuStep::of(double lambda, double dt)
{
    if (lambda == 0) return {1.0, dt, dt};
    return {std::exp(-lambda * dt), -std::expm1(-lambda * dt) / lambda, -std::expm1(-2 * lambda * dt) / (2 * lambda)};
}

WhiteNoiseDraw WhiteNoiseDraw::generate(const TorusGrid& g, std::uint64_t seed, bool with_ou)
{
    g.validate();
    WhiteNoiseDraw d;
    d.g_ = g;
    d.seed_ = seed;
    d.dw_ = SpectralField(g, 0, g.steps);
    if (with_ou) d.z_ = SpectralField(g, 0, g.steps);

    const Philox4x32 rng(seed);
    const int K = g.M / 2;
    const long origin = std::lround(g.t0 / g.dt);
    const double sd = std::sqrt(g.dt / 2);
    std::vector<OuStep> ou(K + 1);
    for (int k = 0; k <= K; ++k) ou[k] = OuStep::of(heat_rate(k), g.dt);

    for (int n = 0; n < g.steps; ++n) {
        const auto cell = static_cast<std::uint32_t>(origin + n);
        for (int k = 0; k <= K; ++k) {
            const bool real = (k == 0 || k == K);
            auto [a, b] = rng.normals({cell, static_cast<std::uint32_t>(k), kIncrement, 0});
            const std::complex<double> w = real ? std::complex<double>(a * std::sqrt(g.dt), 0) : std::complex<double>(a * sd, b * sd);
            d.dw_(n, k) = w;
            if (!with_ou) continue;
            auto [e1, e2] = rng.normals({cell, static_cast<std::uint32_t>(k), kInnovation, 0});
            const std::complex<double> eta = real ? std::complex<double>(e1, 0) : std::complex<double>(e1, e2) / std::sqrt(2.0);
            const OuStep& s = ou[k];
            const double resid = std::sqrt(std::max(s.v - s.c * s.c / g.dt, 0.0));
            (*d.z_)(n, k) = (s.c / g.dt) * w + resid * eta;
        }
    }
    return d;
}

const SpectralField& WhiteNoiseDraw::ou_innovations() const
{
    if (!z_) throw std::logic_error("noise draw generated without OU innovations");
    return *z_;
}

GridField WhiteNoiseDraw::cells_physical() const
{
    GridField f = to_physical(dw_);
    const double s = g_.dx();
    for (double& v : f.values()) v *= s;
    return f;
}

WhiteNoiseDraw WhiteNoiseDraw::coarsen(int space_factor, int time_factor) const
{
    if (space_factor < 1 || time_factor < 1 || g_.M % space_factor != 0 || g_.steps % time_factor != 0)
        throw std::invalid_argument("coarsen: factors must divide the grid");
    TorusGrid c = g_;
    c.M = g_.M / space_factor;
    c.dt = g_.dt * time_factor;
    c.steps = g_.steps / time_factor;
    c.validate();

    WhiteNoiseDraw d;
    d.g_ = c;
    d.seed_ = seed_;
    d.dw_ = SpectralField(c, 0, c.steps);
    if (z_) d.z_ = SpectralField(c, 0, c.steps);
    const int Kc = c.M / 2;
    const bool new_nyquist = space_factor > 1;
    for (int n = 0; n < c.steps; ++n) {
        for (int k = 0; k <= Kc; ++k) {
            const double decay = std::exp(-heat_rate(k) * g_.dt);
            std::complex<double> w = 0, z = 0;
            for (int i = 0; i < time_factor; ++i) {
                w += dw_(n * time_factor + i, k);
                if (z_) z = z * decay + (*z_)(n * time_factor + i, k);
            }
            if (k == Kc && new_nyquist) {
                w = std::sqrt(2.0) * w.real();
                z = std::sqrt(2.0) * z.real();
            }
            d.dw_(n, k) = w;
            if (z_) (*d.z_)(n, k) = z;
        }
    }
    return d;
}

} // namespace sheito
