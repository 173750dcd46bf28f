#include "superkg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "superkg/acceptance.hpp"
#include "superkg/bargmann.hpp"
#include "superkg/kg_spectral.hpp"
#include "superkg/special.hpp"
#include "superkg/stochastic.hpp"
#include "superkg/superosc.hpp"

namespace skg::cli {

namespace {

std::ostream& log_or_null(std::ostream* log) {
    static std::ostream null_stream{nullptr};
    return log ? *log : null_stream;
}

void note_written(std::vector<std::string>* written, const std::string& path) {
    if (written) written->push_back(path);
}

double parse_number(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("malformed number for ") + what + ": '" + text + "'");
    }
}

std::string format_range(const Range& r) {
    return format_double(r.min) + ":" + format_double(r.max) + ":" + std::to_string(r.count);
}

void write_file(const std::string& path, const std::string& body) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << body;
}

// "stem.csv" + 1.5 -> "stem_a1.5.csv"
std::string series_path(const std::string& out, double a) {
    const std::string tag = "_a" + format_double(a);
    const std::size_t dot = out.find_last_of('.');
    const std::size_t slash = out.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + tag;
    return out.substr(0, dot) + tag + out.substr(dot);
}

kg_spectral::KgProblem problem_from(const RunConfig& config, double a_override) {
    kg_spectral::KgProblem problem;
    problem.m = config.m;
    if (config.problem_case == "one")
        problem.initial = kg_spectral::ProblemOne{a_override};
    else
        problem.initial = kg_spectral::ProblemTwo{a_override, config.b.value()};
    if (config.source == "zero")
        problem.source = kg_spectral::SourceTerm::zero;
    else if (config.source == "dirac-space")
        problem.source = kg_spectral::SourceTerm::dirac_space;
    else
        problem.source = kg_spectral::SourceTerm::dirac_spacetime;
    return problem;
}

void preamble_common(std::ostringstream& os, const RunConfig& config) {
    os << "# command=" << config.command << "\n";
    if (!config.preset.empty()) os << "# preset=" << config.preset << "\n";
}

std::string render_evolve_series(const RunConfig& config, double a) {
    const kg_spectral::KgProblem problem = problem_from(config, a);
    const special::PanelConfig quad{config.panels_per_unit, config.quad_order};
    const kg_spectral::SolutionField field =
        kg_spectral::evaluate_field(problem, config.n, config.x.grid(), config.t.grid(), quad);

    std::ostringstream os;
    preamble_common(os, config);
    os << "# n=" << config.n << "\n";
    os << "# a=" << format_double(a) << "\n";
    if (config.b) os << "# b=" << format_double(*config.b) << "\n";
    os << "# m=" << format_double(config.m) << "\n";
    os << "# case=" << config.problem_case << "\n";
    os << "# source=" << config.source << "\n";
    os << "# x=" << format_range(config.x) << "\n";
    os << "# t=" << format_range(config.t) << "\n";
    os << "# panels_per_unit=" << format_double(config.panels_per_unit) << "\n";
    os << "# quad_order=" << config.quad_order << "\n";
    os << "# format=" << config.format << "\n";
    os << "x,t,re,im\n";
    for (std::size_t it = 0; it < field.t_grid.size(); ++it)
        for (std::size_t ix = 0; ix < field.x_grid.size(); ++ix) {
            const auto v = field.at(it, ix);
            os << format_double(field.x_grid[ix]) << ',' << format_double(field.t_grid[it])
               << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << "\n";
        }
    return os.str();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<double> Range::grid() const {
    std::vector<double> g;
    g.reserve(std::size_t(count));
    if (count == 1) {
        g.push_back(min);
        return g;
    }
    for (int i = 0; i < count; ++i)
        g.push_back(min + (max - min) * double(i) / double(count - 1));
    return g;
}

Range parse_range(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("range must be min:max:count, got '" + text + "'");
    Range r;
    r.min = parse_number(text.substr(0, c1), "range min");
    r.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "range max");
    const double count = parse_number(text.substr(c2 + 1), "range count");
    if (count < 1 || count != std::floor(count) || count > 1e7)
        throw ConfigError("range count must be a positive integer: '" + text + "'");
    r.count = int(count);
    return r;
}

void RunConfig::validate() const {
    if (n < 1) throw ConfigError("n must be >= 1");
    const auto check_range = [](const Range& r, const char* name) {
        if (r.count < 1) throw ConfigError(std::string(name) + ": count must be >= 1");
        if (r.min > r.max) throw ConfigError(std::string(name) + ": min exceeds max");
        if (r.count > 1 && r.min == r.max)
            throw ConfigError(std::string(name) + ": degenerate range with count > 1");
    };
    check_range(x, "x range");
    check_range(t, "t range");
    check_range(z_re, "z_re range");
    check_range(z_im, "z_im range");

    if (problem_case != "one" && problem_case != "two")
        throw ConfigError("case must be 'one' or 'two'");
    if (source != "zero" && source != "dirac-space" && source != "dirac-spacetime")
        throw ConfigError("source must be zero, dirac-space or dirac-spacetime");
    if (problem_case == "two" && !b)
        throw ConfigError("case two requires --b (velocity-data frequency)");
    if (problem_case == "one" && b)
        throw ConfigError("--b is only meaningful for case two");
    if (problem_case == "two" && source == "dirac-spacetime")
        throw ConfigError("the dirac-spacetime source is only defined for case one");
    if (format != "csv" && format != "report")
        throw ConfigError("format must be csv or report");
    if (tol_scale <= 0.0) throw ConfigError("tol-scale must be positive");
    if (panels_per_unit <= 0.0) throw ConfigError("panels-per-unit must be positive");
    if (quad_order < 1 || quad_order > 64) throw ConfigError("order must be in [1, 64]");
    if (gh_nodes < 4 || gh_nodes > 128)
        throw ConfigError("nodes must be in [4, 128] (the checked pair doubles it)");
}

void apply_preset(RunConfig& config, const std::vector<std::string>& explicitly_set) {
    if (config.preset.empty()) return;
    const auto is_set = [&](const char* flag) {
        return std::find(explicitly_set.begin(), explicitly_set.end(), flag) !=
               explicitly_set.end();
    };
    const auto set_if_free = [&](const char* flag, auto&& apply) {
        if (!is_set(flag)) apply();
    };

    if (config.preset == "figure1") {
        set_if_free("--n", [&] { config.n = 10; });
        set_if_free("--m", [&] { config.m = 3.0; });
        set_if_free("--case", [&] { config.problem_case = "one"; });
        set_if_free("--source", [&] { config.source = "zero"; });
        set_if_free("--x", [&] { config.x = Range{-10.0, 10.0, 2001}; });
        set_if_free("--t", [&] { config.t = Range{0.0, 0.0, 1}; });
        set_if_free("--a-list", [&] { config.a_list = {1.5, 2.0, 4.0}; });
        set_if_free("--out", [&] { config.out = "figure1.csv"; });
    } else if (config.preset == "figure2") {
        set_if_free("--n", [&] { config.n = 10; });
        set_if_free("--a", [&] { config.a = 1.5; });
        set_if_free("--m", [&] { config.m = 3.0; });
        set_if_free("--case", [&] { config.problem_case = "one"; });
        set_if_free("--source", [&] { config.source = "zero"; });
        set_if_free("--x", [&] { config.x = Range{-10.0, 10.0, 201}; });
        set_if_free("--t", [&] { config.t = Range{0.0, 2.0, 81}; });
        set_if_free("--out", [&] { config.out = "figure2.csv"; });
    } else {
        throw ConfigError("unknown preset: " + config.preset);
    }
}

int cmd_evolve(const RunConfig& config, std::vector<std::string>* written, std::ostream* log) {
    std::ostream& out_log = log_or_null(log);
    try {
        config.validate();
        if (config.t.min < 0.0) throw ConfigError("evolve requires t >= 0");
        const std::string out = config.out.empty() ? "evolve.csv" : config.out;

        if (!config.a_list.empty()) {
            for (double a : config.a_list) {
                RunConfig series = config;
                series.a = a;
                const std::string path = series_path(out, a);
                write_file(path, render_evolve_series(series, a));
                note_written(written, path);
                out_log << "wrote " << path << "\n";
            }
        } else {
            write_file(out, render_evolve_series(config, config.a));
            note_written(written, out);
            out_log << "wrote " << out << "\n";
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}

int cmd_verify(const RunConfig& config, std::vector<std::string>* written, std::ostream* log) {
    std::ostream& out_log = log_or_null(log);
    try {
        if (config.tol_scale <= 0.0) throw ConfigError("tol-scale must be positive");

        acceptance::Options opt;
        opt.tol_scale = config.tol_scale;
        opt.only = config.only;
        const auto results = acceptance::run_all(opt);
        if (results.empty()) throw ConfigError("no checks match filter '" + config.only + "'");

        bool all_pass = true;
        std::ostringstream report;
        report << "# command=verify\n";
        report << "# tol_scale=" << format_double(config.tol_scale) << "\n";
        if (!config.only.empty()) report << "# only=" << config.only << "\n";
        report << "name,value,tolerance,pass\n";
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            out_log << acceptance::format_line(r) << "\n";
            report << r.name << ',' << format_double(r.value) << ',' << format_double(r.tol)
                   << ',' << (r.pass ? 1 : 0) << "\n";
        }
        out_log << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";

        if (!config.out.empty()) {
            write_file(config.out, report.str());
            note_written(written, config.out);
            out_log << "wrote " << config.out << "\n";
        }
        return all_pass ? exit_ok : exit_check_failed;
    } catch (const ConfigError& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}

int cmd_bargmann(const RunConfig& config, std::vector<std::string>* written, std::ostream* log) {
    std::ostream& out_log = log_or_null(log);
    try {
        config.validate();
        if (config.n > 12 && !config.allow_large_n)
            throw ConfigError(
                "n > 12 makes the tensor quadratures expensive; pass --allow-large-n to "
                "override the cost guard");
        const double t_slice = config.t.min;
        if (t_slice < 0.0) throw ConfigError("bargmann requires t >= 0");
        const std::string stem = config.out.empty() ? "bargmann" : config.out;
        const int n = config.n;
        const double a = config.a, m = config.m;

        // transformed-evolution samples over the complex grid
        std::ostringstream xi_csv;
        preamble_common(xi_csv, config);
        xi_csv << "# n=" << n << "\n# a=" << format_double(a) << "\n# m=" << format_double(m)
               << "\n# t=" << format_double(t_slice) << "\n";
        xi_csv << "# z_re=" << format_range(config.z_re)
               << "\n# z_im=" << format_range(config.z_im) << "\n";
        xi_csv << "re_z,im_z,re_xi,im_xi,t0_check\n";
        for (double q : config.z_im.grid())
            for (double p : config.z_re.grid()) {
                const bargmann::cplx z{p, q};
                const bargmann::cplx xi = bargmann::xi_closed_form(n, a, m, t_slice, z);
                // at t = 0 the mass drops out of the closed form entirely
                const double t0_check = std::abs(bargmann::xi_closed_form(n, a, m, 0.0, z) -
                                                 bargmann::xi_closed_form(n, a, 0.0, 0.0, z));
                xi_csv << format_double(p) << ',' << format_double(q) << ','
                       << format_double(xi.real()) << ',' << format_double(xi.imag()) << ','
                       << format_double(t0_check) << "\n";
            }
        const std::string xi_path = stem + "_xi.csv";
        write_file(xi_path, xi_csv.str());
        note_written(written, xi_path);
        out_log << "wrote " << xi_path << "\n";

        // round-trip and derivative-representation error table
        const special::QuadratureRule rule = special::gauss_hermite(config.gh_nodes);
        const bargmann::XiFunction xi_t{n, a, m, t_slice};

        double max_roundtrip = 0.0, max_deriv = 0.0;
        std::ostringstream rt_csv;
        preamble_common(rt_csv, config);
        rt_csv << "# n=" << n << "\n# a=" << format_double(a) << "\n# m=" << format_double(m)
               << "\n# t=" << format_double(t_slice) << "\n# nodes=" << config.gh_nodes
               << "\n";
        rt_csv << "x,re_direct,im_direct,re_inverted,im_inverted,abs_err,deriv_abs_err\n";
        for (double xv : Range{-2.0, 2.0, 17}.grid()) {
            const bargmann::cplx direct =
                kg_spectral::evolve_homogeneous(n, a, m, xv, t_slice);
            const bargmann::cplx inverted = bargmann::sb_inverse(xi_t, xv, rule, rule);
            const double err = std::abs(direct - inverted);
            const bargmann::cplx deriv_direct = superosc::eval_fn_derivative({n, a}, xv);
            const bargmann::cplx deriv_rep =
                bargmann::fn_derivative_integral_rep(n, a, xv, rule, rule);
            const double derr = std::abs(deriv_direct - deriv_rep);
            max_roundtrip = std::max(max_roundtrip, err);
            max_deriv = std::max(max_deriv, derr);
            rt_csv << format_double(xv) << ',' << format_double(direct.real()) << ','
                   << format_double(direct.imag()) << ',' << format_double(inverted.real())
                   << ',' << format_double(inverted.imag()) << ',' << format_double(err)
                   << ',' << format_double(derr) << "\n";
        }
        const std::string rt_path = stem + "_roundtrip.csv";
        write_file(rt_path, rt_csv.str());
        note_written(written, rt_path);
        out_log << "wrote " << rt_path << "\n";
        out_log << "max roundtrip error " << max_roundtrip << ", max derivative error "
                << max_deriv << " (bound 1e-6)\n";
        return (max_roundtrip <= 1e-6 && max_deriv <= 1e-6) ? exit_ok : exit_check_failed;
    } catch (const ConfigError& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}

int cmd_kernel(const RunConfig& config, std::vector<std::string>* written, std::ostream* log) {
    std::ostream& out_log = log_or_null(log);
    try {
        if (config.s_grid.min < 0.0 || config.t.min < 0.0)
            throw ConfigError("kernel requires nonnegative s and t grids");
        const stochastic::CovKernelParams params{config.m, config.x0};
        const special::PanelConfig quad{config.panels_per_unit, config.quad_order};

        std::ostringstream os;
        preamble_common(os, config);
        os << "# m=" << format_double(config.m) << "\n";
        os << "# x0=" << format_double(config.x0) << "\n";
        os << "# s=" << format_range(config.s_grid) << "\n";
        os << "# t=" << format_range(config.t) << "\n";
        os << "# panels_per_unit=" << format_double(config.panels_per_unit) << "\n";
        os << "# quad_order=" << config.quad_order << "\n";
        os << "s,t,K\n";
        for (double s : config.s_grid.grid())
            for (double t : config.t.grid())
                os << format_double(s) << ',' << format_double(t) << ','
                   << format_double(stochastic::cov_kernel(params, s, t, quad)) << "\n";

        const std::string out = config.out.empty() ? "kernel.csv" : config.out;
        write_file(out, os.str());
        note_written(written, out);
        out_log << "wrote " << out << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}

int cmd_coeffs(const RunConfig& config, std::vector<std::string>* written, std::ostream* log) {
    std::ostream& out_log = log_or_null(log);
    try {
        if (config.n < 1) throw ConfigError("n must be >= 1");
        const superosc::CoefficientSet set = superosc::coefficients({config.n, config.a});

        std::ostringstream os;
        preamble_common(os, config);
        os << "# n=" << config.n << "\n";
        os << "# a=" << format_double(config.a) << "\n";
        os << "# materialized=" << (set.materialized ? 1 : 0) << "\n";
        os << "j,lambda,value,log_magnitude,sign\n";
        for (int j = 0; j <= config.n; ++j) {
            os << j << ',' << format_double(set.lambda(j)) << ',';
            if (set.materialized) os << format_double(set.values[j]);
            os << ',' << format_double(set.log_magnitudes[j]) << ',' << set.signs[j] << "\n";
        }

        const std::string out = config.out.empty() ? "coeffs.csv" : config.out;
        write_file(out, os.str());
        note_written(written, out);
        out_log << "wrote " << out << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_bad_config;
    } catch (const std::exception& e) {
        out_log << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}

CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);

    CsvData data;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const std::string body = line.substr(2);
            const std::size_t eq = body.find('=');
            if (eq != std::string::npos)
                data.preamble[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!header_seen) {
            data.columns = cells;
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& cell : cells) {
            try {
                row.push_back(cell.empty() ? std::nan("") : std::stod(cell));
            } catch (const std::exception&) {
                row.push_back(std::nan(""));
            }
        }
        data.rows.push_back(std::move(row));
    }
    return data;
}

RunConfig config_from_preamble(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw ConfigError("cannot read " + csv_path);

    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) != 0) break;
        const std::string body = line.substr(2);
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) continue;
        kv[body.substr(0, eq)] = body.substr(eq + 1);
    }

    RunConfig config;
    const auto get = [&](const char* key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("command")) config.command = *v;
    if (const auto* v = get("preset")) config.preset = *v;
    if (const auto* v = get("n")) config.n = int(parse_number(*v, "n"));
    if (const auto* v = get("a")) config.a = parse_number(*v, "a");
    if (const auto* v = get("b")) config.b = parse_number(*v, "b");
    if (const auto* v = get("m")) config.m = parse_number(*v, "m");
    if (const auto* v = get("case")) config.problem_case = *v;
    if (const auto* v = get("source")) config.source = *v;
    if (const auto* v = get("x")) config.x = parse_range(*v);
    if (const auto* v = get("t")) config.t = parse_range(*v);
    if (const auto* v = get("s")) config.s_grid = parse_range(*v);
    if (const auto* v = get("x0")) config.x0 = parse_number(*v, "x0");
    if (const auto* v = get("z_re")) config.z_re = parse_range(*v);
    if (const auto* v = get("z_im")) config.z_im = parse_range(*v);
    if (const auto* v = get("panels_per_unit"))
        config.panels_per_unit = parse_number(*v, "panels_per_unit");
    if (const auto* v = get("quad_order")) config.quad_order = int(parse_number(*v, "quad_order"));
    if (const auto* v = get("nodes")) config.gh_nodes = int(parse_number(*v, "nodes"));
    if (const auto* v = get("format")) config.format = *v;
    return config;
}

}  // namespace skg::cli
