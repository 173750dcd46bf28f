// Command-line front end: figure reproduction, grid evaluation, the
// verification suite, kernel tables and coefficient dumps.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "superkg/cli.hpp"

namespace {

using skg::cli::RunConfig;

// Flags the user actually passed (command line or config file); presets only
// fill the rest.
std::vector<std::string> seen_flags(const CLI::App& app) {
    std::vector<std::string> seen;
    for (const CLI::Option* opt : app.get_options())
        if (opt->count() > 0 && !opt->get_lnames().empty())
            seen.push_back("--" + opt->get_lnames().front());
    return seen;
}

void add_range_option(CLI::App* cmd, const std::string& name, skg::cli::Range& target,
                      const std::string& desc) {
    cmd->add_option_function<std::string>(
           name,
           [&target](const std::string& text) { target = skg::cli::parse_range(text); }, desc)
        ->expected(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superoscillation dynamics toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI file (flags win on conflict)");

    RunConfig config;
    std::string x_text, t_text, s_text, zre_text, zim_text;

    CLI::App* evolve = app.add_subcommand("evolve", "evaluate a solution field to CSV");
    evolve->add_option("--n", config.n, "number of modes minus one");
    evolve->add_option("--a", config.a, "position-data frequency");
    evolve->add_option_function<double>(
        "--b", [&config](double v) { config.b = v; }, "velocity-data frequency (case two)");
    evolve->add_option("--m", config.m, "mass");
    evolve->add_option("--case", config.problem_case, "initial-data family: one|two");
    evolve->add_option("--source", config.source,
                       "source term: zero|dirac-space|dirac-spacetime");
    add_range_option(evolve, "--x", config.x, "x grid as min:max:count");
    add_range_option(evolve, "--t", config.t, "t grid as min:max:count");
    evolve->add_option("--a-list", config.a_list, "series of a values (one file per value)");
    evolve->add_option("--preset", config.preset, "figure1|figure2");
    evolve->add_option("--panels-per-unit", config.panels_per_unit,
                       "quadrature panels per unit length");
    evolve->add_option("--order", config.quad_order, "quadrature order per panel");
    evolve->add_option("--out", config.out, "output CSV path");
    evolve->add_option("--format", config.format, "csv|report");

    CLI::App* verify = app.add_subcommand("verify", "run the full acceptance suite");
    verify->add_option("--only", config.only, "substring filter on check names");
    verify->add_option("--tol-scale", config.tol_scale, "scale every tolerance");
    verify->add_option("--out", config.out, "write the structured report here");

    CLI::App* bargmann = app.add_subcommand("bargmann",
                                            "transform-domain samples and round-trip errors");
    bargmann->add_option("--n", config.n, "number of modes minus one (cost guard at 12)")
        ->default_val(6);
    bargmann->add_option("--a", config.a, "position-data frequency");
    bargmann->add_option("--m", config.m, "mass");
    add_range_option(bargmann, "--t", config.t, "time slice as t:t:1");
    add_range_option(bargmann, "--z-re", config.z_re, "Re z grid as min:max:count");
    add_range_option(bargmann, "--z-im", config.z_im, "Im z grid as min:max:count");
    bargmann->add_option("--nodes", config.gh_nodes, "quadrature nodes per axis");
    bargmann->add_flag("--allow-large-n", config.allow_large_n, "override the cost guard");
    bargmann->add_option("--out", config.out, "output stem (two CSV files)");

    CLI::App* kernel = app.add_subcommand("kernel", "covariance kernel table");
    kernel->add_option("--m", config.m, "mass")->default_val(0.0);
    kernel->add_option("--x0", config.x0, "spatial offset of the kernel");
    add_range_option(kernel, "--s", config.s_grid, "s grid as min:max:count");
    add_range_option(kernel, "--t", config.t, "t grid as min:max:count");
    kernel->add_option("--panels-per-unit", config.panels_per_unit,
                       "quadrature panels per unit length");
    kernel->add_option("--order", config.quad_order, "quadrature order per panel");
    kernel->add_option("--out", config.out, "output CSV path");

    CLI::App* coeffs = app.add_subcommand("coeffs", "superoscillatory coefficient table");
    coeffs->add_option("--n", config.n, "number of modes minus one");
    coeffs->add_option("--a", config.a, "target frequency");
    coeffs->add_option("--out", config.out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return skg::cli::exit_bad_config;
    }

    try {
        if (evolve->parsed()) {
            config.command = "evolve";
            skg::cli::apply_preset(config, seen_flags(*evolve));
            return skg::cli::cmd_evolve(config, nullptr, &std::cout);
        }
        if (verify->parsed()) {
            config.command = "verify";
            return skg::cli::cmd_verify(config, nullptr, &std::cout);
        }
        if (bargmann->parsed()) {
            config.command = "bargmann";
            if (!bargmann->count("--t")) config.t = skg::cli::Range{0.3, 0.3, 1};
            return skg::cli::cmd_bargmann(config, nullptr, &std::cout);
        }
        if (kernel->parsed()) {
            config.command = "kernel";
            if (!kernel->count("--t")) config.t = skg::cli::Range{0.0, 3.0, 13};
            return skg::cli::cmd_kernel(config, nullptr, &std::cout);
        }
        if (coeffs->parsed()) {
            config.command = "coeffs";
            return skg::cli::cmd_coeffs(config, nullptr, &std::cout);
        }
    } catch (const skg::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return skg::cli::exit_bad_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return skg::cli::exit_check_failed;
    }
    return skg::cli::exit_bad_config;
}
