#include "sheito/spde/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace sheito {

Nonlinearity Nonlinearity::linear(double slope)
{
    Nonlinearity n{"linear", {}};
    n.d[0] = [slope](double u) { return slope * u; };
    n.d[1] = [slope](double) { return slope; };
    for (int i = 2; i < orders; ++i) n.d[i] = [](double) { return 0.0; };
    return n;
}

Nonlinearity Nonlinearity::quadratic()
{
    Nonlinearity n{"quad", {}};
    n.d[0] = [](double u) { return u * u; };
    n.d[1] = [](double u) { return 2 * u; };
    n.d[2] = [](double) { return 2.0; };
    for (int i = 3; i < orders; ++i) n.d[i] = [](double) { return 0.0; };
    return n;
}

Nonlinearity Nonlinearity::sine()
{
    Nonlinearity n{"sin", {}};
    for (int i = 0; i < orders; ++i) {
        n.d[i] = [i](double u) {
            switch (i % 4) {
            case 0: return std::sin(u);
            case 1: return std::cos(u);
            case 2: return -std::sin(u);
            default: return -std::cos(u);
            }
        };
    }
    return n;
}

Nonlinearity Nonlinearity::derivative(int n) const
{
    Nonlinearity r{name + "^(" + std::to_string(n) + ")", {}};
    for (int i = 0; i < orders; ++i)
        r.d[i] = i + n < orders ? d[i + n] : std::function<double(double)>([](double) { return 0.0; });
    return r;
}

Nonlinearity Nonlinearity::by_name(const std::string& name)
{
    if (name == "linear") return linear();
    if (name == "quad") return quadratic();
    if (name == "sin") return sine();
    throw std::invalid_argument("unknown nonlinearity '" + name + "' (expected linear|quad|sin)");
}

} // namespace sheito
