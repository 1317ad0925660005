#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nemlab/compressible.hpp"
#include "nemlab/state.hpp"

namespace nemlab {

/// A state together with the grid it lives on (for reading from disk).
struct Snapshot {
    std::shared_ptr<Grid> grid;
    std::unique_ptr<State> state;
};

/// Binary field snapshot. Byte layout, little-endian:
///   bytes 0-3   magic "NLFS"
///   u32         format version (1)
///   u32         dim (1 or 2)
///   u32         boundary kind (0 periodic, 1 dirichlet-rectangle)
///   u32         reserved (0)
///   u64         nx, u64 ny
///   f64         lx, f64 ly
///   f64         time
///   f64[n]      rho, then u components, then d components; each field is
///               nx*ny doubles, row-major with x fastest.
void write_snapshot(const std::string& path, const State& s);

Snapshot read_snapshot(const std::string& path);

/// Debug CSV: x,y,rho,u0,u1,d0,d1 per row.
void export_state_csv(const std::string& path, const State& s);

/// Diagnostics CSV with the documented run columns; incompressible runs add
/// the divergence and multiplier columns.
void export_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows,
                            bool incompressible);

}  // namespace nemlab
