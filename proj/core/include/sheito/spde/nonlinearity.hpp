#pragma once

#include <array>
#include <functional>
#include <string>

namespace sheito {

// phi together with its derivatives phi^(0..7): the composition lift needs five derivatives of
// whichever of phi, phi', phi'' it is applied to.
struct Nonlinearity {
    static constexpr int orders = 8;
    std::string name;
    std::array<std::function<double(double)>, orders> d;

    double operator()(double u) const { return d[0](u); }
    double derivative(int order, double u) const { return d.at(order)(u); }

    static Nonlinearity linear(double slope = 1.0);
    static Nonlinearity quadratic(); // u^2
    static Nonlinearity sine();
    static Nonlinearity identity() { return linear(1.0); }
    // "linear" | "quad" | "sin"
    static Nonlinearity by_name(const std::string& name);
    // phi^(n) with its own derivatives (orders beyond the table are zero).
    Nonlinearity derivative(int n) const;
};

} // namespace sheito
