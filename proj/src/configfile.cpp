#include "nemlab/configfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nemlab {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

int to_int(const std::string& v, const std::string& key) {
    double x = to_double(v, key);
    if (x != double(long(x))) throw ConfigError("config: expected integer for '" + key + "'");
    return int(x);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig rc;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        if (section == "params") {
            if (key == "mu") rc.params.mu = to_double(val, key);
            else if (key == "xi") rc.params.xi = to_double(val, key);
            else if (key == "lambda") rc.params.lambda = to_double(val, key);
            else if (key == "alpha") rc.params.alpha = to_double(val, key);
            else if (key == "a") rc.params.a = to_double(val, key);
            else if (key == "gamma") rc.params.gamma = to_double(val, key);
            else if (key == "eps") rc.params.eps = to_double(val, key);
            else if (key == "zeta") rc.params.zeta = to_double(val, key);
            else throw ConfigError("config: unknown key [params]." + key);
        } else if (section == "grid") {
            if (key == "dim") rc.grid.dim = to_int(val, key);
            else if (key == "nx") rc.grid.nx = to_int(val, key);
            else if (key == "ny") rc.grid.ny = to_int(val, key);
            else if (key == "lx") rc.grid.lx = to_double(val, key);
            else if (key == "ly") rc.grid.ly = to_double(val, key);
            else if (key == "boundary") {
                if (val == "periodic") rc.grid.periodic = true;
                else if (val == "dirichlet") rc.grid.periodic = false;
                else throw ConfigError("config: boundary must be periodic|dirichlet");
            } else throw ConfigError("config: unknown key [grid]." + key);
        } else if (section == "scheme") {
            if (key == "dt") rc.scheme.dt = to_double(val, key);
            else if (key == "t_end") rc.scheme.t_end = to_double(val, key);
            else if (key == "imex_theta") rc.scheme.imex_theta = to_double(val, key);
            else if (key == "cfl_safety") rc.scheme.cfl_safety = to_double(val, key);
            else if (key == "director_substeps") rc.scheme.director_substeps = to_int(val, key);
            else if (key == "output_every") rc.scheme.output_every = to_int(val, key);
            else if (key == "solver") {
                if (val != "compressible" && val != "incompressible")
                    throw ConfigError("config: solver must be compressible|incompressible");
                rc.solver = val;
            } else throw ConfigError("config: unknown key [scheme]." + key);
        } else if (section == "sweep") {
            if (key == "eps") {
                rc.sweep_eps.clear();
                std::stringstream ss(val);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    tok = trim(tok);
                    if (!tok.empty()) rc.sweep_eps.push_back(to_double(tok, key));
                }
                if (rc.sweep_eps.empty()) throw ConfigError("config: empty eps list");
            } else if (key == "seed") {
                rc.seed = unsigned(to_int(val, key));
            } else if (key == "t_end") {
                rc.scheme.t_end = to_double(val, key);
            } else throw ConfigError("config: unknown key [sweep]." + key);
        } else {
            throw ConfigError("config: key outside a known section at line " +
                              std::to_string(lineno));
        }
    }
    try {
        rc.params.validate();
        rc.scheme.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (rc.grid.dim != 1 && rc.grid.dim != 2) throw ConfigError("config: dim must be 1 or 2");
    return rc;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace nemlab
