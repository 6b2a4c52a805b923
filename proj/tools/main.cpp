#include "experiments.hpp"

#include "sheito/kernels/constants.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sheito;
using namespace sheito::experiments;

namespace {

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// "t:x,t:x,..."
std::vector<std::pair<double, double>> parse_points(const std::string& text)
{
    std::vector<std::pair<double, double>> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("point '" + item + "' is not t:x");
        out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    }
    return out;
}

// "name=value,name=value"
std::map<std::string, double> parse_tolerances(const std::string& text)
{
    std::map<std::string, double> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("tolerance '" + item + "' is not name=value");
        out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return out;
}

std::string symbol_text(std::string s)
{
    for (char& c : s)
        if (c == '*') c = ' ';
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symbolic BPHZ renormalisation and numerical Ito-formula checks for the 1-D stochastic heat equation"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string kappa = "1/100", zeta = "3/2+2k", tol, out;
    std::uint64_t seed = 0;
    bool as_json = false, as_csv = false;
    app.add_option("--seed", seed, "Seed of the philox4x32-10 counter-based generator");
    app.add_option("--kappa", kappa, "kappa as a rational, e.g. 1/100");
    app.add_option("--zeta", zeta, "Regularity cutoff, e.g. 3/2+2k (k = kappa)");
    app.add_option("--tol", tol, "Tolerance overrides name=value,...");
    app.add_option("--out", out, "Write the report to this file instead of stdout");
    auto* j = app.add_flag("--json", as_json, "JSON report");
    auto* c = app.add_flag("--csv", as_csv, "CSV report (default): '#' header lines, then one block per table");
    j->excludes(c);

    ExperimentConfig cfg;
    std::string eps_list, points, tau = "Xi*I(Xi)", check = "variance";
    int levels = 5;
    bool canonical = false;

    auto eps_opt = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--eps,--eps-list", eps_list, help);
    };
    auto grid_opts = [&](CLI::App* sub) {
        sub->add_option("--M", cfg.M, "Grid points on the circle (power of two)");
        sub->add_option("--dt", cfg.dt, "Time step");
        sub->add_option("--T", cfg.T, "Final time");
    };

    auto* renorm_cmd = app.add_subcommand("renorm", "Renormalisation map on the basis against the closed form, worked "
                                                    "expansions and cointeraction.\nColumns: tau, homogeneity, "
                                                    "delta_minus_terms, status, M_tau[, M_tau_numeric]");
    eps_opt(renorm_cmd, "Also evaluate M_eps numerically at this eps");

    auto* constants_cmd = app.add_subcommand("constants", "Renormalisation constants.\nColumns: eps, C1, C2, eps_C1, "
                                                          "eps_C2, C1_minus_C2, A, B, abs_eps_C1_minus_A, "
                                                          "abs_eps_C2_minus_B, eps_C1_quadrature_discrepancy");
    eps_opt(constants_cmd, "Comma-separated eps values (default 0.2,0.1,0.05,0.025)");

    auto* kernel_cmd = app.add_subcommand("kernel-identity", "Heat-kernel identity residuals.\nColumns: t, x, lhs, rhs, "
                                                             "residual");
    kernel_cmd->add_option("--points", points, "Sample points t:x,... (default five points at t = 0.25, 1)");

    auto* bounds_cmd = app.add_subcommand("model-bounds", "Scaling probe of the model.\nColumns: eps, model, tau, "
                                                          "lambda, sup, ratio, slope");
    eps_opt(bounds_cmd, "eps list (default 0.1,0.025: the acceptance preset)");
    grid_opts(bounds_cmd);
    bounds_cmd->add_option("--tau", tau, "Symbol to probe; with --tau, only that symbol is probed at the first eps");
    bounds_cmd->add_option("--levels", levels, "Dyadic levels 2^-1..2^-n");
    bounds_cmd->add_flag("--canonical", canonical, "Probe the canonical rather than the BPHZ model");

    auto* pathwise_cmd = app.add_subcommand("ito-pathwise", "Pathwise renormalised chain rule at eps > 0.\nColumns: M, "
                                                            "psi_x, lhs, first_rough, second_rough, counterterm, "
                                                            "residual, reference, relative");
    eps_opt(pathwise_cmd, "eps (default 0.05)");
    pathwise_cmd->add_option("--phi", cfg.phi, "linear | quad | sin (default sin)");
    pathwise_cmd->add_option("--M", cfg.M, "Coarse grid (the refinement doubles it)");

    auto* ito_cmd = app.add_subcommand("ito-check", "Integral Ito formula for phi = u^2 under coupled refinement.\n"
                                                    "Columns: seed, M, lhs, walsh, trace, chaos2, residual");
    ito_cmd->add_option("--phi", cfg.phi, "quad");
    ito_cmd->add_option("--t", cfg.t, "Evaluation time");
    ito_cmd->add_option("--x", cfg.x, "Evaluation point");
    ito_cmd->add_option("--samples", cfg.seeds, "Number of seeds (default 200)");
    ito_cmd->add_option("--M", cfg.M, "Coarse grid (the refinement doubles it)");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo checks of the stochastic convolution.\n"
                                                   "variance columns: t, x, samples, mean_u2, std_error, "
                                                   "integrated_trace, z\nqv columns: seed, eps, qv, expected, ratio");
    grid_opts(sim_cmd);
    sim_cmd->add_option("--check", check, "variance | qv")->check(CLI::IsMember({"variance", "qv"}));
    sim_cmd->add_option("--samples", cfg.seeds, "Number of seeds");
    sim_cmd->add_option("--t", cfg.t, "Evaluation time (variance)");
    sim_cmd->add_option("--x", cfg.x, "Evaluation point (variance)");
    eps_opt(sim_cmd, "eps (qv, default 0.05)");

    auto* diverge_cmd = app.add_subcommand("diverge", "Unrenormalised vs renormalised dual-norm proxies.\nColumns: eps, "
                                                      "C1, C2, first, second, first_renormalised, second_renormalised");
    eps_opt(diverge_cmd, "eps list (default 0.2,0.1,0.05,0.025)");
    grid_opts(diverge_cmd);
    diverge_cmd->add_option("--phi", cfg.phi, "linear | quad | sin (default sin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? 0 : (code == 0 ? 0 : 2);
    }

    Report rep;
    try {
        cfg.seed = seed;
        cfg.output = out;
        try {
            cfg.kappa = parse_rational(kappa);
        } catch (const std::exception& e) {
            throw std::invalid_argument("config field 'kappa': " + std::string(e.what()));
        }
        try {
            cfg.zeta = parse_kappa_value(zeta);
        } catch (const std::exception& e) {
            throw std::invalid_argument("config field 'zeta': " + std::string(e.what()));
        }
        if (!eps_list.empty()) cfg.eps = parse_list(eps_list);
        if (!points.empty()) cfg.points = parse_points(points);
        if (!tol.empty()) cfg.tolerances = parse_tolerances(tol);

        if (*renorm_cmd) rep = renorm(cfg);
        else if (*constants_cmd) rep = constants(cfg);
        else if (*kernel_cmd) rep = kernel_identity_check(cfg);
        else if (*bounds_cmd) {
            if (bounds_cmd->count("--tau") || bounds_cmd->count("--levels") || canonical)
                rep = model_bounds_probe(cfg, {symbol_text(tau), levels, canonical});
            else
                rep = model_bounds(cfg);
        } else if (*pathwise_cmd) rep = ito_pathwise(cfg);
        else if (*ito_cmd) rep = ito_check(cfg);
        else if (*sim_cmd) rep = check == "variance" ? variance_identity(cfg) : quadratic_variation(cfg);
        else if (*diverge_cmd) rep = diverge(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string text = as_json ? rep.to_json().dump(2) + "\n" : rep.to_csv();
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return 1;
        }
        f << text;
    }
    for (const auto& r : rep.records)
        if (!r.pass)
            std::cerr << "FAIL " << r.experiment << " " << r.metric << " = " << r.value << " (need " << r.relation << " "
                      << r.tolerance << ")\n";
    return rep.pass() ? 0 : 1;
}
