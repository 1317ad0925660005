#include "nemlab/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace nemlab {
namespace {

constexpr char kMagic[4] = {'N', 'L', 'F', 'S'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("snapshot: truncated file");
    return v;
}

}  // namespace

void write_snapshot(const std::string& path, const State& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path);
    const Grid& g = s.grid();
    os.write(kMagic, 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint32_t>(os, std::uint32_t(g.dim()));
    put<std::uint32_t>(os, g.periodic() ? 0u : 1u);
    put<std::uint32_t>(os, 0u);
    put<std::uint64_t>(os, std::uint64_t(g.nx()));
    put<std::uint64_t>(os, std::uint64_t(g.ny()));
    put<double>(os, g.lx());
    put<double>(os, g.dim() == 2 ? g.ly() : 0.0);
    put<double>(os, s.t);
    os.write(reinterpret_cast<const char*>(s.rho.data()), std::streamsize(g.size() * sizeof(double)));
    for (int c = 0; c < g.dim(); ++c)
        os.write(reinterpret_cast<const char*>(s.u.data(c)), std::streamsize(g.size() * sizeof(double)));
    for (int c = 0; c < g.dim(); ++c)
        os.write(reinterpret_cast<const char*>(s.d.data(c)), std::streamsize(g.size() * sizeof(double)));
    if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    auto version = get<std::uint32_t>(is);
    if (version != kVersion) throw std::runtime_error("snapshot: unsupported version");
    auto dim = get<std::uint32_t>(is);
    auto bkind = get<std::uint32_t>(is);
    get<std::uint32_t>(is);  // reserved
    auto nx = get<std::uint64_t>(is);
    auto ny = get<std::uint64_t>(is);
    double lx = get<double>(is);
    double ly = get<double>(is);
    double t = get<double>(is);

    Snapshot snap;
    Boundary b = bkind == 0 ? Boundary::Periodic : Boundary::DirichletRect;
    snap.grid = std::make_shared<Grid>(int(dim), std::array<double, 2>{lx, ly},
                                       std::array<int, 2>{int(nx), int(ny)}, b);
    snap.state = std::make_unique<State>(*snap.grid);
    snap.state->t = t;
    const std::size_t n = snap.grid->size();
    is.read(reinterpret_cast<char*>(snap.state->rho.data()), std::streamsize(n * sizeof(double)));
    for (int c = 0; c < int(dim); ++c)
        is.read(reinterpret_cast<char*>(snap.state->u.data(c)), std::streamsize(n * sizeof(double)));
    for (int c = 0; c < int(dim); ++c)
        is.read(reinterpret_cast<char*>(snap.state->d.data(c)), std::streamsize(n * sizeof(double)));
    if (!is) throw std::runtime_error("snapshot: truncated field data in " + path);
    return snap;
}

void export_state_csv(const std::string& path, const State& s) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path);
    const Grid& g = s.grid();
    os << std::setprecision(17);
    os << "x,y,rho";
    for (int c = 0; c < g.dim(); ++c) os << ",u" << c;
    for (int c = 0; c < g.dim(); ++c) os << ",d" << c;
    os << "\n";
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            os << g.x(i) << "," << (g.dim() == 2 ? g.y(j) : 0.0) << "," << s.rho(i, j);
            for (int c = 0; c < g.dim(); ++c) os << "," << s.u(c, i, j);
            for (int c = 0; c < g.dim(); ++c) os << "," << s.d(c, i, j);
            os << "\n";
        }
    }
}

void export_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows,
                            bool incompressible) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("diagnostics: cannot open " + path);
    os << std::setprecision(17);
    os << "t,E_eps,dissipation,mass,max_d,L2_rho_dev,L2_Qu,L2_Pu";
    if (incompressible) os << ",L2_div_u,L2_pi";
    os << "\n";
    for (const auto& r : rows) {
        os << r.t << "," << r.energy << "," << r.dissipation << "," << r.mass << "," << r.max_d
           << "," << r.l2_rho_dev << "," << r.l2_qu << "," << r.l2_pu;
        if (incompressible) os << "," << r.l2_div_u << "," << r.l2_pi;
        os << "\n";
    }
}

}  // namespace nemlab
