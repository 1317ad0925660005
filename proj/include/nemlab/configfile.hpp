#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nemlab/grid.hpp"
#include "nemlab/params.hpp"

namespace nemlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    int dim = 2;
    int nx = 128, ny = 128;
    double lx = 2.0 * M_PI, ly = 2.0 * M_PI;
    bool periodic = true;

    Grid make() const {
        return Grid(dim, {lx, ly}, {nx, ny},
                    periodic ? Boundary::Periodic : Boundary::DirichletRect);
    }
};

/// Parsed experiment configuration. Sections and keys:
///   [params]  mu xi lambda alpha a gamma eps zeta
///   [grid]    dim nx ny lx ly boundary=(periodic|dirichlet)
///   [scheme]  dt t_end imex_theta cfl_safety director_substeps output_every
///             solver=(compressible|incompressible)
///   [sweep]   eps=<comma list> seed t_end
struct RunConfig {
    Params params;
    GridSpec grid;
    SchemeConfig scheme;
    std::string solver = "compressible";
    std::vector<double> sweep_eps;
    unsigned seed = 1234;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace nemlab
