#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nemlab {

enum class Boundary {
    Periodic,         // torus [0,Lx) x [0,Ly), spectral differentiation
    DirichletRect,    // closed rectangle [0,Lx] x [0,Ly], endpoints included
};

/// Uniform rectangular grid in 1 or 2 dimensions.
///
/// Periodic grids place n points at x_i = i*h with h = L/n (no duplicated
/// endpoint). Bounded grids include both endpoints, n points with
/// h = L/(n-1), so an n-point bounded axis has n-1 intervals.
class Grid {
  public:
    Grid(int dim, std::array<double, 2> extent, std::array<int, 2> points,
         Boundary boundary)
        : dim_(dim), extent_(extent), points_(points), boundary_(boundary) {
        if (dim != 1 && dim != 2) throw std::invalid_argument("grid: dim must be 1 or 2");
        for (int a = 0; a < dim; ++a) {
            if (points_[a] < 8) throw std::invalid_argument("grid: need >= 8 points per axis");
            if (extent_[a] <= 0.0) throw std::invalid_argument("grid: extent must be positive");
        }
        if (dim == 1) { points_[1] = 1; extent_[1] = 0.0; }
        for (int a = 0; a < dim; ++a)
            spacing_[a] = periodic() ? extent_[a] / points_[a]
                                     : extent_[a] / (points_[a] - 1);
        if (dim == 1) spacing_[1] = 0.0;
    }

    static Grid periodic1d(double L, int n) { return Grid(1, {L, 0.0}, {n, 1}, Boundary::Periodic); }
    static Grid periodic2d(double Lx, double Ly, int nx, int ny) {
        return Grid(2, {Lx, Ly}, {nx, ny}, Boundary::Periodic);
    }
    static Grid bounded1d(double L, int n) { return Grid(1, {L, 0.0}, {n, 1}, Boundary::DirichletRect); }
    static Grid bounded2d(double Lx, double Ly, int nx, int ny) {
        return Grid(2, {Lx, Ly}, {nx, ny}, Boundary::DirichletRect);
    }

    int dim() const { return dim_; }
    Boundary boundary() const { return boundary_; }
    bool periodic() const { return boundary_ == Boundary::Periodic; }
    int nx() const { return points_[0]; }
    int ny() const { return dim_ == 2 ? points_[1] : 1; }
    std::size_t size() const { return std::size_t(nx()) * std::size_t(ny()); }
    double lx() const { return extent_[0]; }
    double ly() const { return extent_[1]; }
    double hx() const { return spacing_[0]; }
    double hy() const { return spacing_[1]; }
    double h(int axis) const { return spacing_[axis]; }
    int n(int axis) const { return points_[axis]; }
    double length(int axis) const { return extent_[axis]; }

    double x(int i) const { return i * spacing_[0]; }
    double y(int j) const { return j * spacing_[1]; }
    std::size_t idx(int i, int j) const { return std::size_t(j) * nx() + i; }

    /// Quadrature weight of node (i,j): h^dim on periodic grids, trapezoidal
    /// (half weight on faces, quarter on corners) on bounded grids.
    double weight(int i, int j) const {
        double w = spacing_[0] * (dim_ == 2 ? spacing_[1] : 1.0);
        if (!periodic()) {
            if (i == 0 || i == nx() - 1) w *= 0.5;
            if (dim_ == 2 && (j == 0 || j == ny() - 1)) w *= 0.5;
        }
        return w;
    }

    double volume() const { return extent_[0] * (dim_ == 2 ? extent_[1] : 1.0); }

    bool same_as(const Grid& o) const {
        return dim_ == o.dim_ && boundary_ == o.boundary_ && points_ == o.points_ &&
               extent_[0] == o.extent_[0] && extent_[1] == o.extent_[1];
    }

    std::string describe() const {
        std::string s = periodic() ? "periodic " : "dirichlet ";
        s += std::to_string(nx());
        if (dim_ == 2) s += "x" + std::to_string(ny());
        return s;
    }

  private:
    int dim_;
    std::array<double, 2> extent_;
    std::array<int, 2> points_;
    Boundary boundary_;
    std::array<double, 2> spacing_{};
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (!a.same_as(b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace nemlab
