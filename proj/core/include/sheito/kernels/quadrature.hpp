#pragma once

#include <vector>

namespace sheito {

// Gauss-Legendre rule on [-1, 1]; nodes from boost's Legendre zeros, cached per order.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre over [a, b] split into `panels` equal pieces.
template <class F>
double composite_gl(F&& f, double a, double b, int panels, int order = 8)
{
    const GaussRule& g = gauss_legendre(order);
    const double h = (b - a) / panels;
    double total = 0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double s = 0;
        for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(mid + 0.5 * h * g.x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

// Nodes and weights of a composite rule, for reuse across many integrands.
struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;
};

NodeSet composite_nodes(double a, double b, int panels, int order = 8);

// Resolution of the mollifier-scale quadratures. `step` is the physical length of one panel
// along the mollifier support; it must resolve the mollifier (step <= eps/8).
struct QuadratureSpec {
    int order = 8;
    double step = 1.0 / 320.0;
    int k_panels = 192;  // Fourier-side panels for the asymptotic targets
    double k_max = 160.0; // Fourier cutoff (the bump transform is below 1e-6 there)
    int t_panels = 96;    // time panels for the cutoff region in C2
    double x_panel = 0.025;

    QuadratureSpec refined() const;
};

} // namespace sheito
