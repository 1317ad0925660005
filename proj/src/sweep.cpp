#include "nemlab/sweep.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include <json.hpp>

#include "nemlab/calculus.hpp"
#include "nemlab/compressible.hpp"
#include "nemlab/incompressible.hpp"

namespace nemlab {
namespace {

// Fixed torus test mode for the forcing pairings: normalized gradient field
// of the lowest harmonic, the periodic counterpart of grad phi_k / lambda_k.
VectorField torus_test_mode(const Grid& g) {
    ScalarField phi(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            phi(i, j) = std::cos(2.0 * M_PI * g.x(i) / g.lx());
    VectorField m = grad(phi);
    double n = l2_norm(m);
    if (n > 0.0) m *= 1.0 / n;
    return m;
}

struct ReferenceSamples {
    std::vector<double> times;
    std::vector<VectorField> u;
    std::vector<VectorField> d;
    std::vector<DiagnosticsRow> rows;
};

SweepRun run_one_eps(const Grid& grid, const RunConfig& cfg, double eps,
                     const ReferenceSamples& ref, const VectorField& test_mode) {
    SweepRun out;
    out.eps = eps;
    Params p = cfg.params;
    p.eps = eps;

    CompressibleSolver solver(grid, p, cfg.scheme);
    State init = well_prepared_initial(grid, p, cfg.seed);
    PoissonContext ctx(grid);

    double e0 = 0.0;
    std::size_t sample_idx = 0;
    std::vector<double> qu2, pu_err2, u_err2, d_err2, times;

    try {
        solver.run(init, [&](const State& s) {
            DiagnosticsRow row = solver.diagnostics(s, solver.dissipation_cum());
            out.rows.push_back(row);
            if (out.rows.size() == 1) e0 = row.energy;
            else if (e0 > 0.0)
                out.energy_margin =
                    std::max(out.energy_margin, (row.energy + row.dissipation) / e0 - 1.0);

            out.sup_l2_rho_dev = std::max(out.sup_l2_rho_dev, row.l2_rho_dev);
            out.max_d = std::max(out.max_d, row.max_d);

            DensityMetrics dm = density_metrics(s, p);
            out.sup_lgamma_dev = std::max(out.sup_lgamma_dev, dm.lgamma_dev);
            out.sup_orlicz_small = std::max(out.sup_orlicz_small, dm.orlicz_small);
            out.sup_orlicz_large = std::max(out.sup_orlicz_large, dm.orlicz_large);
            VelocitySplit vs = velocity_split(s);
            out.sup_u1 = std::max(out.sup_u1, vs.u1_norm);
            out.sup_u2 = std::max(out.sup_u2, vs.u2_norm);

            ForcingReport fr = boundedness_report(s, p, ctx, test_mode);
            for (int k = 0; k < 7; ++k)
                out.max_abs_I[std::size_t(k)] =
                    std::max(out.max_abs_I[std::size_t(k)], std::abs(fr.I[std::size_t(k)]));

            // against the reference trajectory (identical sampling cadence)
            if (sample_idx < ref.times.size()) {
                VectorField q = ctx.project_Q(s.u);
                VectorField pu = s.u;
                pu -= q;
                pu -= ref.u[sample_idx];
                VectorField ue = s.u;
                ue -= ref.u[sample_idx];
                VectorField de = s.d;
                de -= ref.d[sample_idx];
                double qn = l2_norm(q), pn = l2_norm(pu), un = l2_norm(ue), dn = l2_norm(de);
                qu2.push_back(qn * qn);
                pu_err2.push_back(pn * pn);
                u_err2.push_back(un * un);
                d_err2.push_back(dn * dn);
                times.push_back(s.t);
            }
            ++sample_idx;
        });
        out.converged = true;
    } catch (const NumericalFailure& e) {
        out.converged = false;
        out.failure = e.what();
        return out;
    }

    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        double hdt = 0.5 * (times[k + 1] - times[k]);
        out.qu_l2l2 += hdt * (qu2[k] + qu2[k + 1]);
        out.pu_err_l2l2 += hdt * (pu_err2[k] + pu_err2[k + 1]);
        out.u_err_l2l2 += hdt * (u_err2[k] + u_err2[k + 1]);
        out.d_err_l2l2 += hdt * (d_err2[k] + d_err2[k + 1]);
    }
    return out;
}

}  // namespace

SweepReport sweep(const RunConfig& cfg) {
    if (cfg.sweep_eps.size() < 3)
        throw std::invalid_argument("sweep: need >= 3 eps values (geometric spacing)");
    Grid grid = cfg.grid.make();
    SweepReport rep;
    rep.eps_list = cfg.sweep_eps;
    rep.seed = cfg.seed;
    rep.grid_desc = grid.describe();

    // incompressible reference from the projected limit data (the gradient
    // part of u0 scales with eps, so P u0 is eps-independent)
    ReferenceSamples ref;
    {
        Params p0 = cfg.params;
        p0.eps = cfg.sweep_eps.front();
        IncompressibleSolver inc(grid, p0, cfg.scheme);
        State init = inc.prepare_initial(well_prepared_initial(grid, p0, cfg.seed));
        inc.run(init, [&](const State& s) {
            ref.times.push_back(s.t);
            ref.u.push_back(s.u);
            ref.d.push_back(s.d);
            ref.rows.push_back(inc.diagnostics(s, inc.dissipation_cum()));
        });
    }
    rep.reference_rows = ref.rows;

    VectorField test_mode = torus_test_mode(grid);

    std::vector<std::future<SweepRun>> futures;
    futures.reserve(cfg.sweep_eps.size());
    for (double eps : cfg.sweep_eps)
        futures.push_back(std::async(std::launch::async, [&, eps] {
            return run_one_eps(grid, cfg, eps, ref, test_mode);
        }));
    for (auto& f : futures) rep.runs.push_back(f.get());

    // fits over converged runs only
    std::vector<double> eps_ok, rho, qu, uerr, i2, i3;
    for (const auto& r : rep.runs) {
        if (!r.converged) continue;
        eps_ok.push_back(r.eps);
        rho.push_back(r.sup_l2_rho_dev);
        qu.push_back(r.qu_l2l2);
        uerr.push_back(r.u_err_l2l2);
        i2.push_back(r.max_abs_I[1]);
        i3.push_back(r.max_abs_I[2]);
    }
    if (eps_ok.size() >= 2) {
        rep.rho_slope = fit_loglog(eps_ok, rho);
        rep.qu_slope = fit_loglog(eps_ok, qu);
        rep.u_err_slope = fit_loglog(eps_ok, uerr);
        rep.i2_slope = fit_loglog(eps_ok, i2);
        rep.i3_slope = fit_loglog(eps_ok, i3);
    }
    return rep;
}

std::string SweepReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["grid"] = grid_desc;
    j["seed"] = seed;
    j["eps"] = eps_list;

    auto fit = [](const SlopeFit& f) {
        return nlohmann::ordered_json{{"slope", f.slope},
                                      {"intercept", f.intercept},
                                      {"half_width", f.half_width},
                                      {"residual", f.residual}};
    };
    j["fits"] = {{"rho_l2", fit(rho_slope)},
                 {"qu_l2l2", fit(qu_slope)},
                 {"u_err_l2l2", fit(u_err_slope)},
                 {"I2", fit(i2_slope)},
                 {"I3", fit(i3_slope)}};

    auto rows_json = [](const std::vector<DiagnosticsRow>& rows) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            a.push_back({{"t", r.t},
                         {"E", r.energy},
                         {"dissipation", r.dissipation},
                         {"mass", r.mass},
                         {"max_d", r.max_d},
                         {"rho_dev", r.l2_rho_dev},
                         {"qu", r.l2_qu},
                         {"pu", r.l2_pu}});
        return a;
    };

    j["runs"] = nlohmann::ordered_json::array();
    for (const auto& r : runs) {
        nlohmann::ordered_json run;
        run["eps"] = r.eps;
        run["converged"] = r.converged;
        if (!r.converged) run["failure"] = r.failure;
        run["sup_rho_l2"] = r.sup_l2_rho_dev;
        run["sup_rho_lgamma"] = r.sup_lgamma_dev;
        run["sup_orlicz_small"] = r.sup_orlicz_small;
        run["sup_orlicz_large"] = r.sup_orlicz_large;
        run["sup_u1"] = r.sup_u1;
        run["sup_u2"] = r.sup_u2;
        run["max_d"] = r.max_d;
        run["energy_margin"] = r.energy_margin;
        run["qu_l2l2"] = r.qu_l2l2;
        run["pu_err_l2l2"] = r.pu_err_l2l2;
        run["u_err_l2l2"] = r.u_err_l2l2;
        run["d_err_l2l2"] = r.d_err_l2l2;
        run["max_abs_I"] = r.max_abs_I;
        run["rows"] = rows_json(r.rows);
        j["runs"].push_back(run);
    }
    j["reference_rows"] = rows_json(reference_rows);
    return j.dump(2);
}

}  // namespace nemlab
