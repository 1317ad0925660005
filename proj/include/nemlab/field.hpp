#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nemlab/grid.hpp"

namespace nemlab {

/// Scalar samples on a grid, row-major with x fastest.
class ScalarField {
  public:
    explicit ScalarField(const Grid& grid) : grid_(&grid), v_(grid.size(), 0.0) {}

    const Grid& grid() const { return *grid_; }
    double& operator()(int i, int j = 0) { return v_[grid_->idx(i, j)]; }
    double operator()(int i, int j = 0) const { return v_[grid_->idx(i, j)]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    bool finite() const {
        return std::all_of(v_.begin(), v_.end(), [](double x) { return std::isfinite(x); });
    }

    ScalarField& operator+=(const ScalarField& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    ScalarField& operator*=(double a) {
        for (double& x : v_) x *= a;
        return *this;
    }

  private:
    const Grid* grid_;
    std::vector<double> v_;
};

/// Vector field: dim component scalar arrays.
class VectorField {
  public:
    explicit VectorField(const Grid& grid)
        : grid_(&grid), comp_(std::size_t(grid.dim()), std::vector<double>(grid.size(), 0.0)) {}

    const Grid& grid() const { return *grid_; }
    int components() const { return int(comp_.size()); }
    double& operator()(int c, int i, int j = 0) { return comp_[c][grid_->idx(i, j)]; }
    double operator()(int c, int i, int j = 0) const { return comp_[c][grid_->idx(i, j)]; }
    double* data(int c) { return comp_[c].data(); }
    const double* data(int c) const { return comp_[c].data(); }

    bool finite() const {
        for (const auto& c : comp_)
            for (double x : c)
                if (!std::isfinite(x)) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        for (std::size_t c = 0; c < comp_.size(); ++c)
            for (std::size_t k = 0; k < comp_[c].size(); ++k) comp_[c][k] += o.comp_[c][k];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        for (std::size_t c = 0; c < comp_.size(); ++c)
            for (std::size_t k = 0; k < comp_[c].size(); ++k) comp_[c][k] -= o.comp_[c][k];
        return *this;
    }
    VectorField& operator*=(double a) {
        for (auto& c : comp_)
            for (double& x : c) x *= a;
        return *this;
    }

  private:
    const Grid* grid_;
    std::vector<std::vector<double>> comp_;
};

/// Tensor field: dim x dim component scalar arrays, (row, col) indexed.
class TensorField {
  public:
    explicit TensorField(const Grid& grid)
        : grid_(&grid), dim_(grid.dim()),
          comp_(std::size_t(dim_ * dim_), std::vector<double>(grid.size(), 0.0)) {}

    const Grid& grid() const { return *grid_; }
    int dim() const { return dim_; }
    double& operator()(int r, int c, int i, int j = 0) { return comp_[r * dim_ + c][grid_->idx(i, j)]; }
    double operator()(int r, int c, int i, int j = 0) const { return comp_[r * dim_ + c][grid_->idx(i, j)]; }
    double* data(int r, int c) { return comp_[r * dim_ + c].data(); }
    const double* data(int r, int c) const { return comp_[r * dim_ + c].data(); }

  private:
    const Grid* grid_;
    int dim_;
    std::vector<std::vector<double>> comp_;
};

// ---- quadrature and norms ------------------------------------------------

inline double integrate(const ScalarField& f) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * f(i, j);
    return s;
}

inline double mean(const ScalarField& f) { return integrate(f) / f.grid().volume(); }

inline double l2_norm(const ScalarField& f) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * f(i, j) * f(i, j);
    return std::sqrt(s);
}

inline double lp_norm(const ScalarField& f, double p) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * std::pow(std::abs(f(i, j)), p);
    return std::pow(s, 1.0 / p);
}

inline double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f.data()[k]));
    return m;
}

inline double l2_norm(const VectorField& v) {
    const Grid& g = v.grid();
    double s = 0.0;
    for (int c = 0; c < v.components(); ++c)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * v(c, i, j) * v(c, i, j);
    return std::sqrt(s);
}

inline double max_abs(const VectorField& v) {
    const Grid& g = v.grid();
    double m = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            double s = 0.0;
            for (int c = 0; c < v.components(); ++c) s += v(c, i, j) * v(c, i, j);
            m = std::max(m, s);
        }
    return std::sqrt(m);
}

/// L2 inner product with the grid quadrature weights.
inline double inner(const ScalarField& a, const ScalarField& b) {
    const Grid& g = a.grid();
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * a(i, j) * b(i, j);
    return s;
}

inline double inner(const VectorField& a, const VectorField& b) {
    const Grid& g = a.grid();
    double s = 0.0;
    for (int c = 0; c < a.components(); ++c)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j) * a(c, i, j) * b(c, i, j);
    return s;
}

inline double l2_dist(const VectorField& a, const VectorField& b) {
    const Grid& g = a.grid();
    double s = 0.0;
    for (int c = 0; c < a.components(); ++c)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) {
                double d = a(c, i, j) - b(c, i, j);
                s += g.weight(i, j) * d * d;
            }
    return std::sqrt(s);
}

}  // namespace nemlab
