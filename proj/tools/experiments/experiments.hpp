#pragma once

#include "sheito/structure/basis.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheito::experiments {

// Everything a run depends on. Unset grid fields fall back to the experiment's preset; the
// resolved values are written back so that the serialized config reproduces the run.
struct ExperimentConfig {
    Rational kappa = default_kappa();
    KappaValue zeta = default_zeta();
    std::vector<double> eps;
    int M = 0;
    double dt = 0;
    double T = 0;
    int seeds = 0;
    std::uint64_t seed = 0;
    std::string phi;
    double t = 0.25, x = 0.5; // evaluation point of the integral Ito formula
    std::vector<std::pair<double, double>> points; // (t, x) sample points of the kernel identity
    std::string output; // empty: stdout
    std::map<std::string, double> tolerances;

    double tolerance(const std::string& name, double fallback) const;
    // Throws std::invalid_argument naming the offending field.
    void validate() const;
    nlohmann::json to_json() const;
    std::string hash() const; // hex digest of the serialized config
};

struct ResultRecord {
    std::string experiment;
    std::string config_hash;
    std::string metric;
    double value = 0;
    double tolerance = 0;
    std::string relation; // how value is compared with tolerance: "<", "<=", ">=", "==" ...
    bool pass = false;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
    void add(std::vector<nlohmann::json> row) { rows.push_back(std::move(row)); }
};

struct Report {
    std::string command;
    ExperimentConfig config;
    std::vector<Table> tables;
    std::vector<ResultRecord> records;
    bool uses_rng = false;

    void check(const std::string& experiment, const std::string& metric, double value, const std::string& relation,
               double tolerance);
    bool pass() const;
    bool pass(const std::string& experiment) const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// Renormalisation constants C1(eps), C2(eps) and the asymptotic targets, memoised per process.
struct ConstantsRow {
    double eps, c1, c2;
    double c1_rescaled; // C1 by the independent rescaled quadrature
};
ConstantsRow constants_for(double eps);
double target_A_value();
double target_B_value();

// One experiment per acceptance table; the experiment ids are "criterion-N".
Report renorm(ExperimentConfig cfg);            // 1, 2, 3: closed form, worked expansions, cointeraction
Report constants(ExperimentConfig cfg);         // 4
Report kernel_identity_check(ExperimentConfig cfg); // 5
Report model_bounds(ExperimentConfig cfg);      // 6
Report ito_pathwise(ExperimentConfig cfg);      // 7
Report variance_identity(ExperimentConfig cfg); // 8
Report ito_check(ExperimentConfig cfg);         // 9
Report quadratic_variation(ExperimentConfig cfg); // 10
Report diverge(ExperimentConfig cfg);           // 11

// Free-form scaling probe of a single symbol (the acceptance preset is model_bounds).
struct BoundProbeOptions {
    std::string tau = "Xi I(Xi)";
    int levels = 5;
    bool canonical = false;
};
Report model_bounds_probe(ExperimentConfig cfg, const BoundProbeOptions& opt);

} // namespace sheito::experiments
