#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "nemlab/configfile.hpp"
#include "nemlab/snapshot.hpp"
#include "nemlab/svgplot.hpp"

using namespace nemlab;

namespace {

std::filesystem::path tmp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("snapshot round trip is bit exact") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> dist;
    for (bool periodic : {true, false}) {
        Grid g = periodic ? Grid::periodic2d(1.5, 2.5, 16, 24) : Grid::bounded2d(1.5, 2.5, 17, 25);
        State s(g);
        s.t = 0.375;
        for (std::size_t k = 0; k < g.size(); ++k) {
            s.rho.data()[k] = 1.0 + 0.1 * dist(rng);
            for (int c = 0; c < 2; ++c) {
                s.u.data(c)[k] = dist(rng);
                s.d.data(c)[k] = dist(rng);
            }
        }
        auto path = tmp_path("nemlab_snap.bin");
        write_snapshot(path.string(), s);
        Snapshot back = read_snapshot(path.string());
        CHECK(back.grid->same_as(g));
        CHECK(back.state->t == s.t);
        bool equal = true;
        for (std::size_t k = 0; k < g.size(); ++k) {
            equal = equal && back.state->rho.data()[k] == s.rho.data()[k];
            for (int c = 0; c < 2; ++c) {
                equal = equal && back.state->u.data(c)[k] == s.u.data(c)[k];
                equal = equal && back.state->d.data(c)[k] == s.d.data(c)[k];
            }
        }
        CHECK(equal);
        std::filesystem::remove(path);
    }
}

TEST_CASE("snapshot rejects garbage") {
    auto path = tmp_path("nemlab_bad.bin");
    {
        std::ofstream os(path, std::ios::binary);
        os << "not a snapshot";
    }
    CHECK_THROWS(read_snapshot(path.string()));
    std::filesystem::remove(path);
}

TEST_CASE("csv exports write the documented columns") {
    Grid g = Grid::periodic1d(2.0, 8);
    State s(g);
    for (int i = 0; i < 8; ++i) {
        s.rho(i) = 1.0;
        s.d(0, i) = 1.0;
    }
    auto path = tmp_path("nemlab_state.csv");
    export_state_csv(path.string(), s);
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "x,y,rho,u0,d0");
    std::filesystem::remove(path);

    std::vector<DiagnosticsRow> rows(2);
    rows[1].t = 0.5;
    auto dpath = tmp_path("nemlab_diag.csv");
    export_diagnostics_csv(dpath.string(), rows, false);
    std::ifstream ds(dpath);
    std::getline(ds, header);
    CHECK(header == "t,E_eps,dissipation,mass,max_d,L2_rho_dev,L2_Qu,L2_Pu");
    std::filesystem::remove(dpath);
}

TEST_CASE("config parsing: sections, defaults, and errors") {
    const char* text = R"(
# experiment
[params]
mu = 0.05
xi = 0.02
gamma = 2.0
eps = 0.1

[grid]
dim = 2
nx = 64
ny = 64
lx = 6.283185307179586
ly = 6.283185307179586
boundary = periodic

[scheme]
dt = 0.002
t_end = 0.1
solver = compressible

[sweep]
eps = 0.1, 0.05, 0.025
seed = 42
)";
    RunConfig rc = parse_config_text(text);
    CHECK(rc.params.mu == 0.05);
    CHECK(rc.params.gamma == 2.0);
    CHECK(rc.grid.nx == 64);
    CHECK(rc.grid.periodic);
    CHECK(rc.scheme.dt == 0.002);
    CHECK(rc.sweep_eps.size() == 3);
    CHECK(rc.seed == 42);

    CHECK_THROWS_AS(parse_config_text("[params]\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("mu = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[params]\nmu = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[params]\ngamma = 1.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[grid]\nboundary = wall\n"), ConfigError);
}

TEST_CASE("svg plot writes a well-formed file") {
    auto path = tmp_path("nemlab_plot.svg");
    write_svg_lineplot(path.string(), "test", "x", "y",
                       {{"series", {0.1, 0.05, 0.025}, {1.0, 0.5, 0.25}}}, true);
    std::ifstream is(path);
    std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(all.find("<svg") == 0);
    CHECK(all.find("polyline") != std::string::npos);
    CHECK(all.rfind("</svg>\n") == all.size() - 7);
    std::filesystem::remove(path);
}
