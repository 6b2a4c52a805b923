#include "experiments.hpp"

#include "expansions.hpp"

#include "sheito/bphz/renormalisation.hpp"
#include "sheito/kernels/constants.hpp"
#include "sheito/kernels/periodic.hpp"
#include "sheito/model/probes.hpp"
#include "sheito/spde/chaos.hpp"
#include "sheito/spde/probes.hpp"
#include "sheito/spde/rng.hpp"
#include "sheito/structure/structure_group.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sheito::experiments {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class T>
void preset(T& field, const T& value)
{
    if (field == T{}) field = value;
}

int row_at(const SpectralField& f, double t)
{
    int r = 0;
    while (r < f.rows() && f.time(r) < t) ++r;
    return r;
}

int row_at(const ModelContext& c, double t)
{
    int r = 0;
    while (r < c.rows() && c.time(r) < t) ++r;
    return r;
}

double pairwise_sum(const double* v, std::size_t n)
{
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    return pairwise_sum(v, n / 2) + pairwise_sum(v + n / 2, n - n / 2);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

} // namespace

double ExperimentConfig::tolerance(const std::string& name, double fallback) const
{
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

void ExperimentConfig::validate() const
{
    auto fail = [](const std::string& field, const std::string& why) {
        throw std::invalid_argument("config field '" + field + "': " + why);
    };
    // larger kappa admits ever more trees into the basis and the symbolic runs stop being desk-scale
    if (kappa <= 0 || kappa > Rational(1, 10)) fail("kappa", "must lie in (0, 1/10]");
    if (zeta.at(kappa) <= 0) fail("zeta", "must be positive at kappa");
    for (double e : eps)
        if (!(e > 0) || e > 1) fail("eps", "entries must lie in (0, 1]");
    if (M != 0 && (M < 4 || (M & (M - 1)) != 0)) fail("M", "must be a power of two >= 4");
    if (dt < 0) fail("dt", "must be positive");
    if (T < 0) fail("T", "must be positive");
    if (seeds < 0) fail("seeds", "must be positive");
    if (!phi.empty() && phi != "linear" && phi != "quad" && phi != "sin") fail("phi", "must be linear, quad or sin");
    if (!(t > 0)) fail("t", "must be positive");
    for (const auto& [pt, px] : points)
        if (!(pt > 0)) fail("points", "times must be positive");
    for (const auto& [k, v] : tolerances)
        if (!(v >= 0)) fail("tolerances." + k, "must be non-negative");
}

json ExperimentConfig::to_json() const
{
    return json{{"kappa", to_string(kappa)}, {"zeta", zeta.str()}, {"eps", eps},    {"M", M},
                {"dt", dt},                  {"T", T},              {"seeds", seeds}, {"seed", seed},
                {"phi", phi},                {"t", t},              {"x", x},         {"points", points},
                {"output", output},          {"tolerances", tolerances}};
}

std::string ExperimentConfig::hash() const
{
    json j = to_json();
    j.erase("output");
    std::ostringstream s;
    s << std::hex << std::hash<std::string>{}(j.dump());
    return s.str();
}

void Report::check(const std::string& experiment, const std::string& metric, double value, const std::string& relation,
                   double tolerance)
{
    bool ok = false;
    if (relation == "<") ok = value < tolerance;
    else if (relation == "<=") ok = value <= tolerance;
    else if (relation == ">") ok = value > tolerance;
    else if (relation == ">=") ok = value >= tolerance;
    else if (relation == "==") ok = value == tolerance;
    else throw std::invalid_argument("Report::check: unknown relation " + relation);
    records.push_back({experiment, config.hash(), metric, value, tolerance, relation, ok});
}

bool Report::pass() const
{
    return std::all_of(records.begin(), records.end(), [](const ResultRecord& r) { return r.pass; });
}

bool Report::pass(const std::string& experiment) const
{
    bool any = false;
    for (const auto& r : records)
        if (r.experiment == experiment) {
            any = true;
            if (!r.pass) return false;
        }
    return any;
}

json Report::to_json() const
{
    json j;
    j["command"] = command;
    j["config"] = config.to_json();
    j["config_hash"] = config.hash();
    if (uses_rng) {
        j["seed"] = config.seed;
        j["generator"] = Philox4x32::name();
    }
    j["tables"] = json::array();
    for (const auto& t : tables) {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o;
            for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) o[t.columns[i]] = r[i];
            rows.push_back(o);
        }
        j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", rows}});
    }
    j["records"] = json::array();
    for (const auto& r : records)
        j["records"].push_back({{"experiment", r.experiment},
                                {"config_hash", r.config_hash},
                                {"metric", r.metric},
                                {"value", r.value},
                                {"relation", r.relation},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass}});
    j["pass"] = pass();
    return j;
}

std::string Report::to_csv() const
{
    std::ostringstream s;
    s << "# command: " << command << "\n# config: " << config.to_json().dump() << "\n# config_hash: " << config.hash()
      << "\n";
    if (uses_rng) s << "# seed: " << config.seed << "\n# generator: " << Philox4x32::name() << "\n";
    auto cell = [](const json& v) {
        if (v.is_string()) {
            std::string t = v.get<std::string>();
            if (t.find_first_of(",\"\n") == std::string::npos) return t;
            std::string q = "\"";
            for (char c : t) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        return v.dump();
    };
    for (const auto& t : tables) {
        s << "# table: " << t.name << "\n";
        for (std::size_t i = 0; i < t.columns.size(); ++i) s << (i ? "," : "") << t.columns[i];
        s << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << cell(r[i]);
            s << "\n";
        }
    }
    s << "# table: records\nexperiment,metric,value,relation,tolerance,pass\n";
    for (const auto& r : records)
        s << r.experiment << "," << r.metric << "," << json(r.value).dump() << "," << r.relation << ","
          << json(r.tolerance).dump() << "," << (r.pass ? "PASS" : "FAIL") << "\n";
    return s.str();
}

double target_A_value()
{
    static const double a = target_A(Mollifier{});
    return a;
}

double target_B_value()
{
    static const double b = target_B(Mollifier{});
    return b;
}

ConstantsRow constants_for(double eps)
{
    static std::mutex mu;
    static std::map<double, ConstantsRow> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(eps);
        if (it != cache.end()) return it->second;
    }
    const auto c = renormalisation_constants(eps, target_B_value());
    const ConstantsRow row{eps, c.c1(), c.c2(), c.c1_rescaled};
    std::lock_guard lock(mu);
    cache.emplace(eps, row);
    return row;
}

// ---------------------------------------------------------------------------------------------

Report renorm(ExperimentConfig cfg)
{
    cfg.validate();
    Report rep{"renorm", cfg};

    // closed form against the coproduct pipeline on the whole basis
    {
        const Stopwatch sw;
        RenormalisationMap M;
        const auto basis = enumerate_basis(cfg.zeta, cfg.kappa);
        std::vector<std::string> cols{"tau", "homogeneity", "delta_minus_terms", "status", "M_tau"};
        std::optional<std::pair<double, double>> numeric;
        if (!cfg.eps.empty()) {
            const auto c = constants_for(cfg.eps.front());
            numeric = {c.c1, c.c2};
            cols.push_back("M_tau_numeric");
        }
        Table t{"closed_form", cols};
        int mismatches = 0;
        for (const Symbol& s : basis) {
            const SymbolSum pipeline = M(s);
            const bool ok = pipeline == closed_form_M(s);
            mismatches += !ok;
            std::vector<json> row{s.str(), s.homogeneity().str(), coproduct_minus(iota(s)).size(), ok ? "MATCH" : "DIFF",
                                  to_string(pipeline)};
            if (numeric) {
                std::ostringstream v;
                bool first = true;
                for (const auto& [sym, c] : evaluate(pipeline, {{gen::C1, numeric->first}, {gen::C2, numeric->second}})) {
                    v << (first ? "" : " + ") << c << "*" << sym.str();
                    first = false;
                }
                row.push_back(v.str());
            }
            t.add(std::move(row));
        }
        const double secs = sw.seconds();
        rep.tables.push_back(std::move(t));
        rep.check("criterion-1", "basis_size", static_cast<double>(basis.size()), ">", 0);
        rep.check("criterion-1", "mismatches", mismatches, "==", 0);
        rep.check("criterion-1", "runtime_s", secs, "<", cfg.tolerance("renorm_runtime_s", 5));
    }

    // the hand-worked coproduct and antipode expansions
    {
        Table t{"worked_expansions", {"tree", "map", "computed_terms", "displayed_terms", "annihilated_terms", "status"}};
        BphzCharacter h;
        TwistedAntipode antipode;
        int bad = 0;
        for (const auto& e : worked::displayed_expansions()) {
            const auto cp = worked::compare_coproduct(coproduct_minus(e.tree), e, h);
            const auto ca = worked::compare_antipode(antipode(e.tree), e);
            for (const auto& [name, c] : {std::pair{"Delta-", &cp}, std::pair{"A-", &ca}}) {
                bad += !c->ok;
                t.add({e.name, name, c->computed_terms, c->displayed_terms, c->annihilated_terms, c->ok ? "MATCH" : "DIFF"});
            }
        }
        rep.tables.push_back(std::move(t));
        rep.check("criterion-2", "mismatched_expansions", bad, "==", 0);
    }

    // cointeraction M Gamma_h = Gamma_h M in exact arithmetic
    {
        std::mt19937_64 gen(cfg.seed);
        RenormalisationMap M;
        const auto basis = enumerate_basis(cfg.zeta, cfg.kappa);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
        const int pairs = 200;
        int bad = 0;
        Table t{"cointeraction", {"tau", "h", "status"}};
        for (int i = 0; i < pairs; ++i) {
            const Symbol& tau = basis[pick(gen)];
            std::array<Poly, 3> hv;
            std::array<Rational, 3> hr;
            for (int k = 0; k < 3; ++k) {
                hr[k] = Rational(num(gen), den(gen));
                hv[k] = Poly(hr[k]);
            }
            const bool ok = M(gamma_action(hv, tau)) == gamma_action(hv, M(tau));
            bad += !ok;
            t.add({tau.str(), "(" + to_string(hr[0]) + ", " + to_string(hr[1]) + ", " + to_string(hr[2]) + ")",
                   ok ? "MATCH" : "DIFF"});
        }
        rep.tables.push_back(std::move(t));
        rep.check("criterion-3", "pairs", pairs, ">=", 200);
        rep.check("criterion-3", "mismatches", bad, "==", 0);
    }
    return rep;
}

Report constants(ExperimentConfig cfg)
{
    preset(cfg.eps, {0.2, 0.1, 0.05, 0.025});
    cfg.validate();
    Report rep{"constants", cfg};
    const Stopwatch sw;
    const double A = target_A_value(), B = target_B_value();
    Table t{"constants", {"eps", "C1", "C2", "eps_C1", "eps_C2", "C1_minus_C2", "A", "B", "abs_eps_C1_minus_A",
                          "abs_eps_C2_minus_B", "eps_C1_quadrature_discrepancy"}};
    std::vector<double> gaps, resolution;
    double rel1 = 0, rel2 = 0;
    for (double e : cfg.eps) {
        const auto c = constants_for(e);
        gaps.push_back(std::abs(e * c.c1 - A));
        resolution.push_back(e * std::abs(c.c1 - c.c1_rescaled));
        t.add({e, c.c1, c.c2, e * c.c1, e * c.c2, c.c1 - c.c2, A, B, gaps.back(), std::abs(e * c.c2 - B),
               resolution.back()});
        rel1 = std::abs(e * c.c1 - A) / A;
        rel2 = std::abs(e * c.c2 - B) / B;
    }
    rep.tables.push_back(std::move(t));
    rep.tables.push_back({"targets", {"A", "B", "relative_gap"}, {{A, B, std::abs(A - B) / A}}});
    // eps C1 = A holds exactly once rho_eps * rho_eps sits where K = G, so the gaps are quadrature
    // rounding. A step counts as an increase only if it exceeds twice the measured discrepancy of
    // the two independent C1 quadratures at both ends.
    const double slack = cfg.tolerance("gap_resolution_factor", 2);
    int increases = 0;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        increases += gaps[i] > gaps[i - 1] + slack * (resolution[i - 1] + resolution[i]);
    rep.check("criterion-4", "rel_err_eps_C1_at_min_eps", rel1, "<", cfg.tolerance("c1_rel", 0.05));
    rep.check("criterion-4", "rel_err_eps_C2_at_min_eps", rel2, "<", cfg.tolerance("c2_rel", 0.05));
    rep.check("criterion-4", "gap_increases", increases, "==", 0);
    rep.check("criterion-4", "rel_gap_A_B", std::abs(A - B) / A, "<", cfg.tolerance("ab_gap", 1e-3));
    rep.check("criterion-4", "runtime_s", sw.seconds(), "<", cfg.tolerance("constants_runtime_s", 120));
    return rep;
}

Report kernel_identity_check(ExperimentConfig cfg)
{
    cfg.validate();
    if (cfg.points.empty()) cfg.points = {{0.25, 0.0}, {0.25, 0.2}, {0.25, -0.45}, {1.0, 0.1}, {1.0, 0.5}};
    Report rep{"kernel-identity", cfg};
    Table t{"kernel_identity", {"t", "x", "lhs", "rhs", "residual"}};
    double worst = 0;
    for (auto [tt, x] : cfg.points) {
        const auto k = kernel_identity(tt, x);
        worst = std::max(worst, k.residual());
        t.add({tt, x, k.lhs, k.rhs, k.residual()});
    }
    rep.tables.push_back(std::move(t));
    rep.check("criterion-5", "max_residual", worst, "<", cfg.tolerance("residual", 1e-4));
    return rep;
}

namespace {

struct ScalingWindow {
    double keep_from = 0.23, keep_to = 1.10;
    double sample_from = 0.3, sample_to = 1.0;
    int sample_times = 8, sample_columns = 16;
};

ModelContext scaling_model(const WhiteNoiseDraw& draw, double eps, const ScalingWindow& w, const ExperimentConfig& cfg)
{
    const SpectralField xi = mollify_noise(draw, eps);
    ModelOptions o;
    o.zeta = cfg.zeta;
    o.kappa = cfg.kappa;
    o.keep_first = row_at(xi, w.keep_from);
    o.keep_rows = row_at(xi, w.keep_to) - o.keep_first;
    return build_canonical_model(xi, eps, row_at(xi, 0.0), o);
}

std::vector<GridPoint> scaling_points(const ModelContext& c, const ScalingWindow& w)
{
    return sample_points(c, row_at(c, w.sample_from), row_at(c, w.sample_to), w.sample_times, w.sample_columns);
}

void add_levels(Table& t, const ModelBoundReport& r, double eps, const std::string& model)
{
    for (const auto& l : r.levels) t.add({eps, model, r.tau.str(), l.lambda, l.sup, l.ratio, r.slope});
}

} // namespace

Report model_bounds(ExperimentConfig cfg)
{
    preset(cfg.eps, {0.1, 0.025});
    preset(cfg.M, 512);
    const double eps_min = *std::min_element(cfg.eps.begin(), cfg.eps.end());
    const double eps_max = *std::max_element(cfg.eps.begin(), cfg.eps.end());
    preset(cfg.dt, eps_min * eps_min / 16);
    preset(cfg.T, 1.12);
    cfg.validate();
    Report rep{"model-bounds", cfg};
    rep.uses_rng = true;
    const ScalingWindow w;
    const auto g = TorusGrid::over(cfg.M, cfg.dt, cfg.T, -0.0125);
    const auto draw = WhiteNoiseDraw::generate(g, cfg.seed, false);
    const auto levels = dyadic_levels(5);
    const Symbol xi_i = parse_symbol("Xi I(Xi)"), i1sq = parse_symbol("I1(Xi)^2");

    Table t{"scaling", {"eps", "model", "tau", "lambda", "sup", "ratio", "slope"}};
    double ratio_max_eps = 0, ratio_min_eps = 0;
    for (double eps : {eps_max, eps_min}) {
        const ModelContext can = scaling_model(draw, eps, w, cfg);
        const auto pts = scaling_points(can, w);
        const auto rc = model_bound_probe(can, xi_i, levels, pts);
        add_levels(t, rc, eps, "canonical");
        (eps == eps_max ? ratio_max_eps : ratio_min_eps) = rc.levels.front().ratio;
        if (eps == eps_min) {
            const auto c = constants_for(eps);
            const ModelContext ren = build_bphz_model(can, c.c1, c.c2);
            for (const Symbol& tau : {xi_i, i1sq}) {
                const auto r = model_bound_probe(ren, tau, levels, pts);
                add_levels(t, r, eps, "bphz");
                rep.check("criterion-6", "bphz_slope[" + tau.str() + "]", r.slope, ">=",
                          r.homogeneity - cfg.tolerance("slope_margin", 0.15));
            }
        }
    }
    rep.tables.push_back(std::move(t));
    rep.check("criterion-6", "canonical_ratio_growth[" + fmt(eps_max) + "->" + fmt(eps_min) + "]",
              ratio_min_eps / ratio_max_eps, ">=", cfg.tolerance("growth", 2.0));
    return rep;
}

Report model_bounds_probe(ExperimentConfig cfg, const BoundProbeOptions& opt)
{
    preset(cfg.eps, {0.025});
    preset(cfg.M, 512);
    const double eps = cfg.eps.front();
    preset(cfg.dt, eps * eps / 16);
    preset(cfg.T, 1.12);
    cfg.validate();
    Report rep{"model-bounds", cfg};
    rep.uses_rng = true;
    const ScalingWindow w;
    const auto g = TorusGrid::over(cfg.M, cfg.dt, cfg.T, -0.0125);
    const auto draw = WhiteNoiseDraw::generate(g, cfg.seed, false);
    const ModelContext can = scaling_model(draw, eps, w, cfg);
    const Symbol tau = parse_symbol(opt.tau);
    Table t{"scaling", {"eps", "model", "tau", "lambda", "sup", "ratio", "slope"}};
    if (opt.canonical) {
        add_levels(t, model_bound_probe(can, tau, dyadic_levels(opt.levels), scaling_points(can, w)), eps, "canonical");
    } else {
        const auto c = constants_for(eps);
        const ModelContext ren = build_bphz_model(can, c.c1, c.c2);
        add_levels(t, model_bound_probe(ren, tau, dyadic_levels(opt.levels), scaling_points(ren, w)), eps, "bphz");
    }
    rep.tables.push_back(std::move(t));
    return rep;
}

Report ito_pathwise(ExperimentConfig cfg)
{
    preset(cfg.eps, {0.05});
    preset(cfg.M, 256);
    preset(cfg.phi, std::string("sin"));
    cfg.validate();
    Report rep{"ito-pathwise", cfg};
    rep.uses_rng = true;
    const Stopwatch sw;
    const double eps = cfg.eps.front();
    const double tc = 0.06, lambda = 0.2, rad = lambda * lambda / 4, margin = 0.002;
    const int Mf = 2 * cfg.M;
    const double dtf = 0.5 / (double(Mf) * Mf);
    if (cfg.dt == 0) cfg.dt = 4 * dtf;
    if (cfg.T == 0) cfg.T = 4 * dtf * std::ceil((tc + rad + 2 * margin) / (4 * dtf));
    rep.config = cfg;
    if (std::abs(cfg.dt - 4 * dtf) > 1e-15) throw std::invalid_argument("config field 'dt': fixed to dx^2/2 by the refinement pairing");
    const auto fine = WhiteNoiseDraw::generate(TorusGrid::over(Mf, dtf, cfg.T), cfg.seed, false);
    const auto coarse = fine.coarsen(2, 4);
    const auto phi = Nonlinearity::by_name(cfg.phi);
    const auto c = constants_for(eps);
    std::vector<TestFunction> psis;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) psis.emplace_back(tc, x, lambda);

    Table t{"residuals", {"M", "psi_x", "lhs", "first_rough", "second_rough", "counterterm", "residual", "reference", "relative"}};
    std::vector<double> worst_abs, worst_rel;
    for (const WhiteNoiseDraw* d : {&coarse, &fine}) {
        const SpectralField xi = mollify_noise(*d, eps);
        ModelOptions o;
        o.zeta = cfg.zeta;
        o.kappa = cfg.kappa;
        o.keep_first = row_at(xi, tc - rad - margin);
        o.keep_rows = row_at(xi, tc + rad + margin) - o.keep_first;
        const ModelContext ren = build_bphz_model(build_canonical_model(xi, eps, 0, o), c.c1, c.c2);
        double wa = 0, wr = 0;
        const auto res = pathwise_ito_residual(phi, ren, psis);
        for (std::size_t i = 0; i < res.size(); ++i) {
            const auto& r = res[i];
            wa = std::max(wa, std::abs(r.residual));
            wr = std::max(wr, r.relative());
            t.add({d->grid().M, psis[i].x(), r.lhs, r.first_rough, r.second_rough, r.counterterm, r.residual, r.reference,
                   r.relative()});
        }
        worst_abs.push_back(wa);
        worst_rel.push_back(wr);
    }
    rep.tables.push_back(std::move(t));
    rep.check("criterion-7", "max_relative_residual[M=" + std::to_string(cfg.M) + "]", worst_rel[0], "<",
              cfg.tolerance("relative", 1e-2));
    rep.check("criterion-7", "refined_over_coarse_max_residual", worst_abs[1] / worst_abs[0], "<", 1.0);
    rep.check("criterion-7", "runtime_s", sw.seconds(), "<", cfg.tolerance("ito_runtime_s", 60));
    return rep;
}

Report variance_identity(ExperimentConfig cfg)
{
    preset(cfg.M, 64);
    preset(cfg.T, cfg.t);
    preset(cfg.dt, cfg.T / 256);
    preset(cfg.seeds, 2000);
    cfg.validate();
    Report rep{"simulate", cfg};
    rep.uses_rng = true;
    const Stopwatch sw;
    const auto g = TorusGrid::over(cfg.M, cfg.dt, cfg.T);
    const int jx = static_cast<int>(std::lround(cfg.x * cfg.M)) % cfg.M;
    const int row = static_cast<int>(std::lround(cfg.t / cfg.dt));
    if (row > g.steps) throw std::invalid_argument("config field 'T': must reach the evaluation time t");
    std::vector<double> v1, v2;
    for (int i = 0; i < cfg.seeds; ++i) {
        const auto d = WhiteNoiseDraw::generate(g, cfg.seed + i);
        const GridField u = to_physical(slice_rows(stochastic_convolution(d, ConvolutionMethod::ExactOu), row, 1));
        const double v = u(0, jx) * u(0, jx);
        v1.push_back(v);
        v2.push_back(v * v);
    }
    const double s = pairwise_sum(v1), s2 = pairwise_sum(v2);
    const double n = cfg.seeds, m = s / n, se = std::sqrt((s2 / n - m * m) / (n - 1));
    const double target = integrated_trace(g.t(row));
    rep.tables.push_back({"variance", {"t", "x", "samples", "mean_u2", "std_error", "integrated_trace", "z"},
                          {{g.t(row), g.x(jx), cfg.seeds, m, se, target, (m - target) / se}}});
    rep.check("criterion-8", "abs_z", std::abs(m - target) / se, "<", cfg.tolerance("z", 3));
    rep.check("criterion-8", "runtime_s", sw.seconds(), "<", cfg.tolerance("variance_runtime_s", 60));
    return rep;
}

Report ito_check(ExperimentConfig cfg)
{
    preset(cfg.M, 64);
    preset(cfg.T, cfg.t);
    preset(cfg.seeds, 200);
    preset(cfg.phi, std::string("quad"));
    cfg.validate();
    if (cfg.phi != "quad") throw std::invalid_argument("config field 'phi': the integral Ito check is implemented for quad only");
    if (cfg.T < cfg.t) throw std::invalid_argument("config field 'T': must reach the evaluation time t");
    const int Mf = 2 * cfg.M;
    const double dtf = 0.5 / (double(Mf) * Mf);
    preset(cfg.dt, 4 * dtf);
    Report rep{"ito-check", cfg};
    rep.uses_rng = true;
    const auto g = TorusGrid::over(Mf, dtf, cfg.T);
    std::vector<double> coarse_sq, fine_sq;
    Table t{"per_seed", {"seed", "M", "lhs", "walsh", "trace", "chaos2", "residual"}};
    for (int i = 0; i < cfg.seeds; ++i) {
        const auto d = WhiteNoiseDraw::generate(g, cfg.seed + i);
        const auto c = d.coarsen(2, 4);
        for (const WhiteNoiseDraw* w : {&c, &d}) {
            const auto r = ito_terms_quadratic(cfg.t, cfg.x, *w);
            (w == &c ? coarse_sq : fine_sq).push_back(r.residual() * r.residual());
            t.add({cfg.seed + i, w->grid().M, r.lhs, r.walsh, r.trace, r.chaos2, r.residual()});
        }
    }
    const double coarse = pairwise_sum(coarse_sq) / cfg.seeds, fine = pairwise_sum(fine_sq) / cfg.seeds;
    rep.tables.push_back({"mean_square", {"M", "mean_square_residual"}, {{cfg.M, coarse}, {Mf, fine}}});
    rep.tables.push_back(std::move(t));
    rep.check("criterion-9", "ms_ratio_coarse_over_fine", coarse / fine, ">=", cfg.tolerance("ratio", 1.5));
    return rep;
}

Report quadratic_variation(ExperimentConfig cfg)
{
    preset(cfg.eps, {0.05});
    preset(cfg.M, 128);
    preset(cfg.dt, 1e-4);
    preset(cfg.T, 0.25);
    preset(cfg.seeds, 50);
    cfg.validate();
    Report rep{"simulate", cfg};
    rep.uses_rng = true;
    const auto g = TorusGrid::over(cfg.M, cfg.dt, cfg.T);
    Table t{"quadratic_variation", {"seed", "eps", "qv", "expected", "ratio"}};
    std::vector<double> ratios;
    for (int i = 0; i < cfg.seeds; ++i) {
        const auto u = stochastic_convolution(WhiteNoiseDraw::generate(g, cfg.seed + i));
        const auto r = martingale_probe(u, cfg.eps.front(), 0.5);
        ratios.push_back(r.qv / r.expected);
        t.add({cfg.seed + i, r.eps, r.qv, r.expected, r.qv / r.expected});
    }
    const double mean = pairwise_sum(ratios) / cfg.seeds;
    rep.tables.push_back({"summary", {"eps", "T", "seeds", "mean_qv_over_expected"}, {{cfg.eps.front(), g.T(), cfg.seeds, mean}}});
    rep.tables.push_back(std::move(t));
    rep.check("criterion-10", "abs_mean_ratio_minus_1", std::abs(mean - 1), "<", cfg.tolerance("relative", 0.1));
    return rep;
}

Report diverge(ExperimentConfig cfg)
{
    preset(cfg.eps, {0.2, 0.1, 0.05, 0.025});
    preset(cfg.M, 256);
    const double eps_min = *std::min_element(cfg.eps.begin(), cfg.eps.end());
    preset(cfg.dt, eps_min * eps_min / 16);
    preset(cfg.T, 2.0);
    preset(cfg.phi, std::string("sin"));
    cfg.validate();
    Report rep{"diverge", cfg};
    rep.uses_rng = true;
    const auto g = TorusGrid::over(cfg.M, cfg.dt, cfg.T, -0.0125);
    DivergenceOptions o;
    o.lambda = 1.0;
    o.x_centers = 8;
    o.t_centers.clear();
    for (double tc = 0.3; tc <= cfg.T - 0.3 + 1e-12; tc += 0.125) o.t_centers.push_back(tc);
    std::vector<RenormalisationPair> c;
    for (double e : cfg.eps) {
        const auto row = constants_for(e);
        c.push_back({row.c1, row.c2});
    }
    const auto rows = divergence_probe(Nonlinearity::by_name(cfg.phi), cfg.eps, c, WhiteNoiseDraw::generate(g, cfg.seed, false), o);
    Table t{"divergence", {"eps", "C1", "C2", "first", "second", "first_renormalised", "second_renormalised"}};
    std::vector<double> f, s, fr, sr;
    for (const auto& r : rows) {
        t.add({r.eps, r.c1, r.c2, r.first, r.second, r.first_renormalised, r.second_renormalised});
        f.push_back(r.first);
        s.push_back(r.second);
        fr.push_back(r.first_renormalised);
        sr.push_back(r.second_renormalised);
    }
    rep.tables.push_back(std::move(t));
    rep.check("criterion-11", "first_increasing", increasing(f), "==", 1);
    rep.check("criterion-11", "second_increasing", increasing(s), "==", 1);
    rep.check("criterion-11", "spread_first_renormalised", relative_spread(fr), "<=", cfg.tolerance("spread", 0.25));
    rep.check("criterion-11", "spread_second_renormalised", relative_spread(sr), "<=", cfg.tolerance("spread", 0.25));
    return rep;
}

} // namespace sheito::experiments
