// Command-line front end: run / sweep / modes / acoustics / report.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "nemlab/acoustics.hpp"
#include "nemlab/compressible.hpp"
#include "nemlab/configfile.hpp"
#include "nemlab/incompressible.hpp"
#include "nemlab/modes.hpp"
#include "nemlab/snapshot.hpp"
#include "nemlab/svgplot.hpp"
#include "nemlab/sweep.hpp"

namespace fs = std::filesystem;
using namespace nemlab;

namespace {

fs::path output_dir(const std::string& cli_out) {
    const char* env = std::getenv("NEMLAB_OUTDIR");
    fs::path dir = !cli_out.empty() ? fs::path(cli_out)
                 : env != nullptr   ? fs::path(env)
                                    : fs::path("out");
    fs::create_directories(dir);
    return dir;
}

int cmd_run(const std::string& config_path, const std::string& out) {
    RunConfig cfg = parse_config_file(config_path);
    fs::path dir = output_dir(out);
    Grid grid = cfg.grid.make();
    State init = well_prepared_initial(grid, cfg.params, cfg.seed);

    std::vector<DiagnosticsRow> rows;
    int snap_id = 0;
    auto snap_path = [&](int id) {
        std::ostringstream os;
        os << "state_" << std::setw(5) << std::setfill('0') << id << ".bin";
        return (dir / os.str()).string();
    };

    if (cfg.solver == "incompressible") {
        IncompressibleSolver solver(grid, cfg.params, cfg.scheme);
        State prepared = solver.prepare_initial(init);
        solver.run(prepared, [&](const State& s) {
            rows.push_back(solver.diagnostics(s, solver.dissipation_cum()));
            write_snapshot(snap_path(snap_id++), s);
        });
        export_diagnostics_csv((dir / "diagnostics.csv").string(), rows, true);
    } else {
        CompressibleSolver solver(grid, cfg.params, cfg.scheme);
        solver.run(init, [&](const State& s) {
            rows.push_back(solver.diagnostics(s, solver.dissipation_cum()));
            write_snapshot(snap_path(snap_id++), s);
        });
        export_diagnostics_csv((dir / "diagnostics.csv").string(), rows, false);
    }
    std::cout << "run: " << rows.size() << " samples -> " << dir.string() << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out) {
    RunConfig cfg = parse_config_file(config_path);
    if (cfg.sweep_eps.empty())
        throw ConfigError("sweep: config needs a [sweep] eps list");
    fs::path dir = output_dir(out);
    SweepReport rep = sweep(cfg);
    std::ofstream os(dir / "sweep_report.json");
    os << rep.to_json() << "\n";
    std::cout << "sweep: " << rep.runs.size() << " runs; slope(rho_L2)=" << rep.rho_slope.slope
              << " -> " << (dir / "sweep_report.json").string() << "\n";
    for (const auto& r : rep.runs)
        if (!r.converged) {
            std::cerr << "sweep: eps=" << r.eps << " failed: " << r.failure << "\n";
            return 3;
        }
    return 0;
}

int cmd_modes(const std::string& domain, double lx, double ly, double radius, int count,
              double mu, const std::string& out) {
    Params p;
    p.mu = mu;
    std::vector<NeumannMode> modes;
    if (domain == "rectangle")
        modes = rectangle_modes(lx, ly, count);
    else if (domain == "interval")
        modes = interval_modes(lx, count);
    else if (domain == "disk")
        modes = disk_radial_modes(radius, count);
    else
        throw ConfigError("modes: domain must be rectangle|interval|disk");

    std::ostream* osp = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw ConfigError("modes: cannot open " + out);
        osp = &file;
    }
    *osp << "domain,index,lambda0,boundary_integral,Re_lambda1,Im_lambda1,h_condition_active\n";
    *osp << std::setprecision(15);
    for (const auto& m : modes) {
        ModeExpansion ex = mode_expansion(m, p);
        std::string idx = m.domain == NeumannMode::Domain::Disk
                              ? std::to_string(m.radial)
                              : "(" + std::to_string(m.kx) + " " + std::to_string(m.ky) + ")";
        *osp << domain << "," << idx << "," << m.lambda0 << "," << ex.boundary_integral << ","
             << ex.ilambda1_plus.real() << "," << ex.ilambda1_plus.imag() << ","
             << (ex.h_condition_active ? 1 : 0) << "\n";
    }
    return 0;
}

int cmd_acoustics(int n, double B, double eps) {
    Grid grid = Grid::periodic2d(2.0 * M_PI, 2.0 * M_PI, n, n);
    AcousticVec v0(grid);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            v0.phi(i, j) = std::cos(grid.x(i)) + 0.5 * std::cos(2.0 * grid.y(j));

    double e0 = acoustic_energy(v0, B);
    AcousticVec v100 = semigroup_L(100.0, v0, B);
    double drift = std::abs(acoustic_energy(v100, B) - e0) / e0;

    AcousticVec v_a = semigroup_L(0.7, semigroup_L(0.3, v0, B), B);
    AcousticVec v_b = semigroup_L(1.0, v0, B);
    v_a.phi -= v_b.phi;
    v_a.m -= v_b.m;
    double group_err = std::sqrt(l2_norm(v_a.phi) * l2_norm(v_a.phi) +
                                 l2_norm(v_a.m) * l2_norm(v_a.m));

    AcousticForcing forcing;
    forcing.dt = 0.01;
    for (int k = 0; k <= 100; ++k) {
        AcousticVec gk(grid);
        double s = forcing.dt * k;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                gk.m(0, i, j) = std::sin(grid.x(i)) * std::exp(-s);
        forcing.samples.push_back(gk);
    }
    AcousticVec vd = duhamel_solve(v0, forcing, 1.0, eps, B);
    (void)vd;

    ScalarField gfield(grid);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double dx = grid.x(i) - M_PI, dy = grid.y(j) - M_PI;
            gfield(i, j) = std::exp(-(dx * dx + dy * dy));
        }
    SlopeFit fit = mollifier_rates(gfield, 2.0, {0.4, 0.2, 0.1, 0.05});

    std::cout << std::setprecision(6);
    std::cout << "semigroup energy drift over t=100: " << drift << "\n";
    std::cout << "group law L(0.7)L(0.3) vs L(1.0): " << group_err << "\n";
    std::cout << "mollifier rate (L2, Gaussian): slope " << fit.slope << "\n";
    bool ok = drift < 1e-12 && group_err < 1e-12 && fit.slope >= 0.9;
    std::cout << (ok ? "acoustics checks: pass\n" : "acoustics checks: FAIL\n");
    return ok ? 0 : 3;
}

int cmd_report(const std::string& in, const std::string& out) {
    std::ifstream is(in);
    if (!is) throw ConfigError("report: cannot open " + in);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("report: bad JSON: ") + e.what());
    }
    fs::path dir = output_dir(out);

    std::vector<double> eps;
    std::vector<double> rho, qu, uerr;
    for (const auto& r : j.at("runs")) {
        if (!r.at("converged").get<bool>()) continue;
        eps.push_back(r.at("eps").get<double>());
        rho.push_back(r.at("sup_rho_l2").get<double>());
        qu.push_back(r.at("qu_l2l2").get<double>());
        uerr.push_back(r.at("u_err_l2l2").get<double>());
    }
    write_svg_lineplot((dir / "rho_convergence.svg").string(), "sup_t ||rho-1||_L2 vs eps",
                       "eps", "sup_t ||rho-1||", {{"rho_L2", eps, rho}}, true);
    write_svg_lineplot((dir / "velocity_convergence.svg").string(),
                       "space-time velocity errors vs eps", "eps", "L2(0,T;L2)^2",
                       {{"int ||Qu||^2", eps, qu}, {"int ||u-u_inc||^2", eps, uerr}}, true);

    std::cout << "summary\n-------\n";
    std::cout << "grid: " << j.at("grid").get<std::string>() << "\n";
    auto fits = j.at("fits");
    std::cout << std::setprecision(4);
    std::cout << "slope rho_L2:    " << fits.at("rho_l2").at("slope").get<double>() << "\n";
    std::cout << "slope int||Qu||^2: " << fits.at("qu_l2l2").at("slope").get<double>() << "\n";
    std::cout << "slope int||u-u_inc||^2: " << fits.at("u_err_l2l2").at("slope").get<double>()
              << "\n";
    std::cout << "plots -> " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nemlab: compressible nematic flow and its incompressible limit"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    auto* run = app.add_subcommand("run", "single simulation from a config file");
    run->add_option("-c,--config", config_path, "config file")->required();
    run->add_option("-o,--out", out_dir, "output directory (or NEMLAB_OUTDIR)");

    std::string sweep_config, sweep_out;
    auto* sw = app.add_subcommand("sweep", "eps-sweep with convergence-rate report");
    sw->add_option("-c,--config", sweep_config, "config file")->required();
    sw->add_option("-o,--out", sweep_out, "output directory");

    std::string domain = "rectangle", modes_out;
    double lx = M_PI, ly = M_PI, radius = 1.0, mu = 1.0;
    int count = 12;
    auto* md = app.add_subcommand("modes", "Neumann eigenmode and expansion tables");
    md->add_option("--domain", domain, "rectangle|interval|disk");
    md->add_option("--lx", lx, "rectangle width / interval length");
    md->add_option("--ly", ly, "rectangle height");
    md->add_option("--radius", radius, "disk radius");
    md->add_option("--count", count, "number of modes");
    md->add_option("--mu", mu, "shear viscosity entering the correction");
    md->add_option("-o,--out", modes_out, "CSV path (default stdout)");

    int ac_n = 32;
    double ac_B = 1.0, ac_eps = 0.1;
    auto* ac = app.add_subcommand("acoustics", "semigroup / Duhamel / mollifier checks");
    ac->add_option("--grid", ac_n, "grid points per axis");
    ac->add_option("--B", ac_B, "wave-speed coefficient B = a*gamma");
    ac->add_option("--eps", ac_eps, "scaling parameter for the Duhamel check");

    std::string report_in, report_out;
    auto* rp = app.add_subcommand("report", "render a sweep report to SVG + summary");
    rp->add_option("-i,--in", report_in, "sweep_report.json")->required();
    rp->add_option("-o,--out", report_out, "output directory");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(config_path, out_dir);
        if (sw->parsed()) return cmd_sweep(sweep_config, sweep_out);
        if (md->parsed()) return cmd_modes(domain, lx, ly, radius, count, mu, modes_out);
        if (ac->parsed()) return cmd_acoustics(ac_n, ac_B, ac_eps);
        if (rp->parsed()) return cmd_report(report_in, report_out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NumericalFailure& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
