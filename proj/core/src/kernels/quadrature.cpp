#include "sheito/kernels/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace sheito {

const GaussRule& gauss_legendre(int n)
{
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    if (n < 1 || n > 512) throw std::invalid_argument("gauss_legendre: order out of range");
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // boost returns the non-negative zeros in increasing order
    const auto zeros = boost::math::legendre_p_zeros<double>(n);
    GaussRule g;
    for (double z : zeros) {
        const double d = boost::math::legendre_p_prime<double>(n, z);
        const double w = 2.0 / ((1 - z * z) * d * d);
        if (z == 0) {
            g.x.push_back(0);
            g.w.push_back(w);
        } else {
            g.x.push_back(z);
            g.w.push_back(w);
            g.x.push_back(-z);
            g.w.push_back(w);
        }
    }
    return cache.emplace(n, std::move(g)).first->second;
}

NodeSet composite_nodes(double a, double b, int panels, int order)
{
    const GaussRule& g = gauss_legendre(order);
    NodeSet out;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            out.x.push_back(mid + 0.5 * h * g.x[i]);
            out.w.push_back(0.5 * h * g.w[i]);
        }
    }
    return out;
}

QuadratureSpec QuadratureSpec::refined() const
{
    QuadratureSpec r = *this;
    r.step /= 2;
    r.k_panels *= 2;
    r.t_panels *= 2;
    r.x_panel /= 2;
    return r;
}

} // namespace sheito
