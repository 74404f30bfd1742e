// relalt: relativistic alteration factors and separated-solution checks.
//
// Subcommands:
//   gamma   factor from a gravitational source or a relative velocity
//   alter   apply one scaling rule to an s-frame quantity
//   verify  frame-scaling / Hamilton-Jacobi verification records (NDJSON or CSV)
//   eigen   dump eigenvalues (optionally modes) of a discretized operator as CSV
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "relalt/alterations.hpp"
#include "relalt/errors.hpp"
#include "relalt/hamilton_jacobi.hpp"
#include "relalt/metric.hpp"
#include "relalt/numeric.hpp"
#include "relalt/report.hpp"
#include "relalt/run_config.hpp"
#include "relalt/sepvar.hpp"

namespace {

using namespace relalt;

double parse_number(std::string_view text, const std::string& what) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw InvalidInput("cannot parse " + what + ": \"" + std::string(text) + "\"");
    return value;
}

// "0.6c" means 0.6 of the configured light speed; a plain number is m/s.
double parse_velocity(const std::string& text, const Constants& k) {
    if (!text.empty() && text.back() == 'c')
        return parse_number(std::string_view(text).substr(0, text.size() - 1),
                            "velocity") *
               k.c;
    return parse_number(text, "velocity");
}

std::vector<double> parse_gamma_list(const std::string& text) {
    std::vector<double> out;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_number(rest.substr(0, comma), "gamma"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

// Options shared by every subcommand; tolerance flags override the config
// file, which overrides the defaults.
struct Common {
    std::string config_path;
    std::string constants_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    CLI::Option* tol_eigen = nullptr;
    CLI::Option* tol_scaling = nullptr;
    CLI::Option* tol_fd = nullptr;
    CLI::Option* tol_hj = nullptr;
    double tol_eigen_v = 1e-10;
    double tol_scaling_v = 1e-12;
    double tol_fd_v = 1e-6;
    double tol_hj_v = 1e-9;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path,
                    "JSON config file: {constants{G,c,h_planck}, "
                    "tolerances{eigen_residual,frame_scaling,hj_residual}}");
    cmd->add_option("--constants", c.constants_path,
                    "JSON constants file {G,c,h_planck}; overrides --config");
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed for randomized sweeps")
        ->capture_default_str();
    c.tol_eigen = cmd->add_option("--tol-eigen", c.tol_eigen_v,
                                  "Eigen residual tolerance (relative to |lambda|)")
                      ->capture_default_str();
    c.tol_scaling = cmd->add_option("--tol-scaling", c.tol_scaling_v,
                                    "Frame-scaling tolerance (relative to |lambda_s|)")
                        ->capture_default_str();
    c.tol_fd = cmd->add_option("--tol-fd", c.tol_fd_v,
                               "Finite-difference agreement tolerance (relative)")
                   ->capture_default_str();
    c.tol_hj = cmd->add_option("--tol-hj", c.tol_hj_v,
                               "Hamilton-Jacobi residual tolerance")
                   ->capture_default_str();
}

RunConfig resolve_config(const Common& c) {
    RunConfig cfg;
    if (!c.config_path.empty()) cfg = RunConfig::from_json_file(c.config_path);
    if (!c.constants_path.empty())
        cfg.constants = Constants::from_json_file(c.constants_path);
    if (c.tol_eigen->count() > 0) cfg.tolerances.eigen_residual = c.tol_eigen_v;
    if (c.tol_scaling->count() > 0) cfg.tolerances.frame_scaling = c.tol_scaling_v;
    if (c.tol_fd->count() > 0) cfg.tolerances.fd_agreement = c.tol_fd_v;
    if (c.tol_hj->count() > 0) cfg.tolerances.hj_residual = c.tol_hj_v;
    cfg.format = c.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.tolerances.validate();
    cfg.seed = c.seed;
    return cfg;
}

struct GammaArgs {
    Common common;
    double mass = 0.0;
    double radius = 0.0;
    std::string velocity;
    CLI::Option* mass_opt = nullptr;
    CLI::Option* radius_opt = nullptr;
    CLI::Option* velocity_opt = nullptr;
};

int run_gamma(const GammaArgs& a) {
    const RunConfig cfg = resolve_config(a.common);
    const bool have_grav = a.mass_opt->count() > 0 || a.radius_opt->count() > 0;
    const bool have_vel = a.velocity_opt->count() > 0;
    if (have_grav == have_vel)
        throw InvalidInput("give either --mass with --radius, or --velocity");
    AlterationFactor f = AlterationFactor::identity();
    if (have_vel) {
        f = special_lambda(KinematicFrame(parse_velocity(a.velocity, cfg.constants)),
                           cfg.constants);
    } else {
        if (a.mass_opt->count() == 0 || a.radius_opt->count() == 0)
            throw InvalidInput("--mass and --radius go together");
        f = schwarzschild_lambda(GravitationalSource(a.mass, a.radius), cfg.constants);
    }
    if (cfg.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["lambda"] = f.lambda();
        j["gamma"] = f.gamma();
        j["kind"] = to_string(f.kind());
        j["fractional_shift"] = fractional_shift(f);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lambda,gamma,kind,fractional_shift\n"
                  << format_double(f.lambda()) << ',' << format_double(f.gamma()) << ','
                  << to_string(f.kind()) << ',' << format_double(fractional_shift(f))
                  << "\n";
    }
    return 0;
}

struct FactorArgs {
    double gamma = 1.0;
    double lambda = 1.0;
    std::string velocity;
    double grav_mass = 0.0;
    double grav_radius = 0.0;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* velocity_opt = nullptr;
    CLI::Option* grav_mass_opt = nullptr;
    CLI::Option* grav_radius_opt = nullptr;
};

void add_factor_options(CLI::App* cmd, FactorArgs& f) {
    f.gamma_opt = cmd->add_option("--gamma", f.gamma, "Alteration factor gamma in (0,1]");
    f.lambda_opt =
        cmd->add_option("--lambda", f.lambda, "Line-element factor lambda in (0,1]");
    f.velocity_opt = cmd->add_option("--velocity", f.velocity,
                                     "Relative velocity (m/s, or a fraction like 0.6c)");
    f.grav_mass_opt =
        cmd->add_option("--grav-mass", f.grav_mass, "Source mass in kg (with --radius)");
    f.grav_radius_opt =
        cmd->add_option("--radius", f.grav_radius, "Radial coordinate in m");
}

AlterationFactor resolve_factor(const FactorArgs& f, const Constants& k) {
    const bool have_grav = f.grav_mass_opt->count() > 0 || f.grav_radius_opt->count() > 0;
    const int sources = (f.gamma_opt->count() > 0) + (f.lambda_opt->count() > 0) +
                        (f.velocity_opt->count() > 0) + (have_grav ? 1 : 0);
    if (sources != 1)
        throw InvalidInput(
            "give exactly one factor source: --gamma, --lambda, --velocity, or "
            "--grav-mass with --radius");
    if (f.gamma_opt->count() > 0)
        return AlterationFactor::from_gamma(f.gamma, FactorKind::composed);
    if (f.lambda_opt->count() > 0)
        return AlterationFactor::from_lambda(f.lambda, FactorKind::composed);
    if (f.velocity_opt->count() > 0)
        return special_lambda(KinematicFrame(parse_velocity(f.velocity, k)), k);
    if (f.grav_mass_opt->count() == 0 || f.grav_radius_opt->count() == 0)
        throw InvalidInput("--grav-mass and --radius go together");
    return schwarzschild_lambda(GravitationalSource(f.grav_mass, f.grav_radius), k);
}

struct AlterArgs {
    Common common;
    FactorArgs factor;
    double frequency = 0.0;
    double energy = 0.0;
    double mass = 0.0;
    double rate = 0.0;
    CLI::Option* frequency_opt = nullptr;
    CLI::Option* energy_opt = nullptr;
    CLI::Option* mass_opt = nullptr;
    CLI::Option* rate_opt = nullptr;
};

int run_alter(const AlterArgs& a) {
    const RunConfig cfg = resolve_config(a.common);
    const int kinds = (a.frequency_opt->count() > 0) + (a.energy_opt->count() > 0) +
                      (a.mass_opt->count() > 0) + (a.rate_opt->count() > 0);
    if (kinds != 1)
        throw InvalidInput(
            "give exactly one quantity: --frequency, --energy, --mass, or --rate");
    const AlterationFactor f = resolve_factor(a.factor, cfg.constants);

    std::string quantity, rule;
    double s_value = 0.0, m_value = 0.0;
    if (a.frequency_opt->count() > 0) {
        quantity = "frequency_Hz";
        rule = "nu_m = gamma * nu_s";
        s_value = a.frequency;
        m_value = alter_frequency(s_value, f);
    } else if (a.energy_opt->count() > 0) {
        quantity = "energy_J";
        rule = "dE_m = gamma * dE_s";
        s_value = a.energy;
        m_value = alter_energy_gap(s_value, f);
    } else if (a.mass_opt->count() > 0) {
        quantity = "mass_kg";
        rule = "M_m = M_s / gamma";
        s_value = a.mass;
        m_value = alter_mass(s_value, f);
    } else {
        quantity = "separation_constant_per_s";
        rule = "lambda_m = gamma * lambda_s";
        s_value = a.rate;
        m_value = alter_separation_constant(s_value, f);
    }

    if (cfg.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["quantity"] = quantity;
        j["s_value"] = s_value;
        j["m_value"] = m_value;
        j["gamma"] = f.gamma();
        j["rule"] = rule;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "quantity,s_value,m_value,gamma,rule\n"
                  << quantity << ',' << format_double(s_value) << ','
                  << format_double(m_value) << ',' << format_double(f.gamma()) << ",\""
                  << rule << "\"\n";
    }
    return 0;
}

struct OperatorArgs {
    std::string op = "laplacian";
    int n = 1000;
    double length = 1.0;
    int modes = 5;
    double k_const = 1.0;
    double potential = 1.0;
    std::string matrix_path;
};

void add_operator_options(CLI::App* cmd, OperatorArgs& o, bool with_hj) {
    std::vector<std::string> kinds = {"laplacian", "schrodinger", "custom"};
    if (with_hj) kinds.push_back("hj");
    cmd->add_option("--op", o.op, "Operator kind")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
    cmd->add_option("--n", o.n, "Interior grid points")->capture_default_str();
    cmd->add_option("--L", o.length, "Domain length")->capture_default_str();
    cmd->add_option("--modes", o.modes, "Number of leading modes")
        ->capture_default_str();
    cmd->add_option("--k", o.k_const, "Universal constant k of D(T) = k dT/dt")
        ->capture_default_str();
    cmd->add_option("--potential", o.potential,
                    "Constant potential value (schrodinger kind)")
        ->capture_default_str();
    cmd->add_option("--matrix", o.matrix_path,
                    "Dense symmetric matrix CSV (custom kind)");
}

SeparatingOperator build_operator(const OperatorArgs& o) {
    if (o.op == "custom") {
        if (o.matrix_path.empty())
            throw InvalidInput("custom kind needs --matrix <csv>");
        int n = 0;
        std::vector<double> dense = load_dense_csv(o.matrix_path, n);
        return SeparatingOperator::custom(std::move(dense), n, o.k_const);
    }
    const Grid1D grid(o.length, o.n);
    if (o.op == "schrodinger")
        return SeparatingOperator::schrodinger(
            grid, std::vector<double>(static_cast<std::size_t>(o.n), o.potential),
            o.k_const);
    return SeparatingOperator::laplacian(grid, o.k_const);
}

struct VerifyArgs {
    Common common;
    OperatorArgs op;
    std::string gamma_list = "0.5,0.9,0.999";
    double hj_mass = 1.0;
    int hj_families = 0;
};

int run_verify(const VerifyArgs& a) {
    const RunConfig cfg = resolve_config(a.common);
    const std::vector<double> gammas = parse_gamma_list(a.gamma_list);
    if (gammas.empty()) throw InvalidInput("empty --gamma list");
    const bool csv = cfg.format == OutputFormat::csv;
    bool all_pass = true;

    if (a.op.op == "hj") {
        if (csv) std::cout << hj_mass_csv_header() << "\n";
        for (double g : gammas) {
            const auto f = AlterationFactor::from_gamma(g, FactorKind::composed);
            const HJMassRecord rec =
                hj_mass_invariance(a.hj_mass, f, cfg.tolerances.frame_scaling);
            std::cout << (csv ? to_csv_row(rec) : to_json_record(rec)) << "\n";
            all_pass = all_pass && rec.pass;
        }
        if (a.hj_families > 0) {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> exp_a(-2.0, 2.0);
            std::uniform_real_distribution<double> exp_c(-2.0, 1.0);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double worst = 0.0;
            for (int i = 0; i < a.hj_families; ++i) {
                const double A =
                    (unit(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, exp_a(rng));
                const double C = std::pow(10.0, exp_c(rng));
                const double M = std::pow(10.0, exp_a(rng));
                const HJFamily fam = hj_closed_family(A, C, M);
                std::vector<double> rs, ts;
                const double pole = fam.pole_time();
                const double t_hi = pole > 0.0 ? 0.5 * pole : 1.0;
                for (int s = 0; s <= 10; ++s) {
                    rs.push_back(0.3 * s);
                    ts.push_back(t_hi * s / 10.0);
                }
                worst = std::max(worst, hj_residual(fam, rs, ts));
            }
            const bool pass = worst <= cfg.tolerances.hj_residual;
            if (csv) {
                std::cout << "# families=" << a.hj_families
                          << " max_residual=" << format_double(worst)
                          << " pass=" << (pass ? "true" : "false") << "\n";
            } else {
                nlohmann::ordered_json j;
                j["families"] = a.hj_families;
                j["max_residual"] = worst;
                j["tol"] = cfg.tolerances.hj_residual;
                j["pass"] = pass;
                std::cout << j.dump() << "\n";
            }
            all_pass = all_pass && pass;
        }
        return all_pass ? 0 : 1;
    }

    const SeparatingOperator op = build_operator(a.op);
    const std::vector<SeparatedSolution> sols = eigenmodes(op, a.op.modes);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const double r = eigen_residual(op, sols[i]);
        if (r > cfg.tolerances.eigen_residual * std::fabs(sols[i].sep_constant)) {
            std::cerr << "eigen-residual: mode " << i << " residual "
                      << format_double(r) << " exceeds tolerance\n";
            all_pass = false;
        }
    }
    if (csv) std::cout << frame_scaling_csv_header() << "\n";
    for (std::size_t i = 0; i < sols.size(); ++i) {
        for (double g : gammas) {
            const auto f = AlterationFactor::from_gamma(g, FactorKind::composed);
            const FrameScalingRecord rec = verify_frame_scaling(
                sols[i], f, static_cast<int>(i), cfg.tolerances.frame_scaling,
                cfg.tolerances.fd_agreement);
            std::cout << (csv ? to_csv_row(rec) : to_json_record(rec)) << "\n";
            all_pass = all_pass && rec.pass;
        }
    }
    return all_pass ? 0 : 1;
}

struct EigenArgs {
    Common common;
    OperatorArgs op;
    bool with_modes = false;
};

int run_eigen(const EigenArgs& a) {
    resolve_config(a.common);  // validates flags even though only k matters here
    const SeparatingOperator op = build_operator(a.op);
    const std::vector<SeparatedSolution> sols = eigenmodes(op, a.op.modes);
    if (!a.with_modes) std::cout << "mode_index,eigenvalue,residual\n";
    for (std::size_t i = 0; i < sols.size(); ++i) {
        std::cout << i << ',' << format_double(sols[i].sep_constant) << ','
                  << format_double(eigen_residual(op, sols[i]));
        if (a.with_modes)
            for (double x : sols[i].mode) std::cout << ',' << format_double(x);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic alteration factors and separated-solution checks"};
    app.require_subcommand(1);

    GammaArgs ga;
    auto* gamma_cmd = app.add_subcommand(
        "gamma", "Alteration factor from a source or a velocity");
    add_common(gamma_cmd, ga.common);
    ga.mass_opt = gamma_cmd->add_option("--mass", ga.mass, "Source mass in kg");
    ga.radius_opt =
        gamma_cmd->add_option("--radius", ga.radius, "Radial coordinate in m");
    ga.velocity_opt = gamma_cmd->add_option(
        "--velocity", ga.velocity, "Relative velocity (m/s, or a fraction like 0.6c)");

    AlterArgs aa;
    auto* alter_cmd =
        app.add_subcommand("alter", "Apply one scaling rule to an s-frame value");
    add_common(alter_cmd, aa.common);
    add_factor_options(alter_cmd, aa.factor);
    aa.frequency_opt =
        alter_cmd->add_option("--frequency", aa.frequency, "s-frame frequency in Hz");
    aa.energy_opt =
        alter_cmd->add_option("--energy", aa.energy, "s-frame energy gap in J");
    aa.mass_opt = alter_cmd->add_option("--mass", aa.mass, "s-frame mass in kg");
    aa.rate_opt = alter_cmd->add_option("--rate", aa.rate,
                                        "s-frame separation constant in 1/s");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Frame-scaling and Hamilton-Jacobi verification records");
    add_common(verify_cmd, va.common);
    add_operator_options(verify_cmd, va.op, /*with_hj=*/true);
    verify_cmd->add_option("--gamma", va.gamma_list, "Comma-separated gamma values")
        ->capture_default_str();
    verify_cmd->add_option("--mass", va.hj_mass, "s-frame mass for the hj check")
        ->capture_default_str();
    verify_cmd->add_option("--families", va.hj_families,
                           "Also sweep this many random hj families");

    EigenArgs ea;
    auto* eigen_cmd =
        app.add_subcommand("eigen", "Dump leading eigenvalues / modes as CSV");
    add_common(eigen_cmd, ea.common);
    add_operator_options(eigen_cmd, ea.op, /*with_hj=*/false);
    eigen_cmd->add_flag("--with-modes", ea.with_modes,
                        "Append mode components to each row (suppresses the header)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gamma_cmd->parsed()) return run_gamma(ga);
        if (alter_cmd->parsed()) return run_alter(aa);
        if (verify_cmd->parsed()) return run_verify(va);
        return run_eigen(ea);
    } catch (const relalt::ConvergenceError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const relalt::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
