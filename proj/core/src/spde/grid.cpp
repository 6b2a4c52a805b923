#include "sheito/spde/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace sheito {

TorusGrid TorusGrid::over(int M, double dt, double T, double t0)
{
    TorusGrid g;
    g.M = M;
    g.dt = dt;
    g.t0 = t0;
    g.steps = static_cast<int>(std::ceil((T - t0) / dt - 1e-9));
    g.validate();
    return g;
}

int TorusGrid::node(double t) const
{
    const long n = std::lround((t - t0) / dt);
    return static_cast<int>(std::clamp<long>(n, 0, steps));
}

void TorusGrid::validate() const
{
    if (M < 4 || !std::has_single_bit(static_cast<unsigned>(M)))
        throw std::invalid_argument("grid: M must be a power of two >= 4");
    if (!(dt > 0)) throw std::invalid_argument("grid: dt must be positive");
    if (steps < 0) throw std::invalid_argument("grid: negative step count");
}

GridField::GridField(TorusGrid g, int first, int rows)
    : g_(g), first_(first), rows_(rows < 0 ? g.nodes() - first : rows),
      v_(static_cast<std::size_t>(rows_) * g.M, 0.0)
{
}

bool GridField::all_finite() const
{
    return std::all_of(v_.begin(), v_.end(), [](double v) { return std::isfinite(v); });
}

SpectralField::SpectralField(TorusGrid g, int first, int rows)
    : g_(g), first_(first), rows_(rows < 0 ? g.nodes() - first : rows),
      v_(static_cast<std::size_t>(rows_) * g.modes())
{
}

namespace {
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}
} // namespace

struct Fft::Plans {
    fftw_plan fwd = nullptr, inv = nullptr;
    double* r = nullptr;
    fftw_complex* c = nullptr;
};

Fft::Fft(int M) : M_(M), p_(std::make_unique<Plans>())
{
    std::lock_guard lock(planner_mutex());
    p_->r = fftw_alloc_real(M);
    p_->c = fftw_alloc_complex(M / 2 + 1);
    p_->fwd = fftw_plan_dft_r2c_1d(M, p_->r, p_->c, FFTW_ESTIMATE);
    p_->inv = fftw_plan_dft_c2r_1d(M, p_->c, p_->r, FFTW_ESTIMATE);
}

Fft::~Fft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p_->fwd);
    fftw_destroy_plan(p_->inv);
    fftw_free(p_->r);
    fftw_free(p_->c);
}

void Fft::forward(const double* in, std::complex<double>* out) const
{
    std::memcpy(p_->r, in, sizeof(double) * M_);
    fftw_execute(p_->fwd);
    const double s = 1.0 / M_;
    for (int k = 0; k <= M_ / 2; ++k) out[k] = std::complex<double>(p_->c[k][0], p_->c[k][1]) * s;
}

void Fft::inverse(const std::complex<double>* in, double* out) const
{
    for (int k = 0; k <= M_ / 2; ++k) {
        p_->c[k][0] = in[k].real();
        p_->c[k][1] = in[k].imag();
    }
    fftw_execute(p_->inv);
    std::memcpy(out, p_->r, sizeof(double) * M_);
}

SpectralField to_spectral(const GridField& f)
{
    SpectralField s(f.grid(), f.first(), f.rows());
    Fft fft(f.grid().M);
    for (int r = 0; r < f.rows(); ++r) fft.forward(f.row(r), s.row(r));
    return s;
}

GridField to_physical(const SpectralField& f)
{
    GridField g(f.grid(), f.first(), f.rows());
    Fft fft(f.grid().M);
    for (int r = 0; r < f.rows(); ++r) fft.inverse(f.row(r), g.row(r));
    return g;
}

SpectralField dx_spectral(const SpectralField& f, int order)
{
    SpectralField d = f;
    const int K = f.grid().M / 2;
    for (int k = 0; k <= K; ++k) {
        std::complex<double> mult = std::pow(std::complex<double>(0, wavenumber(k)), order);
        if (k == K && order % 2 == 1) mult = 0;
        for (int r = 0; r < f.rows(); ++r) d(r, k) *= mult;
    }
    return d;
}

GridField dx(const GridField& f, int order) { return to_physical(dx_spectral(to_spectral(f), order)); }

} // namespace sheito
