#ifndef QLAB_FIELD_HPP
#define QLAB_FIELD_HPP

#include "qlab/grid.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace qlab {

/// Packed index of an (i,j) pair with i <= j in dimension n.
inline int sym_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

inline int sym_count(int n) { return n * (n + 1) / 2; }

namespace detail {

/** Component-major storage shared by all grid fields: component c occupies
 *  the contiguous slice [c*M, (c+1)*M) where M is the node count. */
class FieldStorage {
public:
    FieldStorage(const PeriodicGrid& grid, int components, double fill = 0.0)
        : grid_(grid),
          components_(components),
          values_(grid.node_count() * static_cast<std::size_t>(components), fill) {}

    const PeriodicGrid& grid() const { return grid_; }
    int components() const { return components_; }
    std::size_t node_count() const { return grid_.node_count(); }

    double* comp(int c) { return values_.data() + static_cast<std::size_t>(c) * node_count(); }
    const double* comp(int c) const {
        return values_.data() + static_cast<std::size_t>(c) * node_count();
    }

    std::vector<double>& raw() { return values_; }
    const std::vector<double>& raw() const { return values_; }

    bool all_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    PeriodicGrid grid_;
    int components_;
    std::vector<double> values_;
};

} // namespace detail

/// Real scalar field sampled on the grid nodes.
class ScalarField : public detail::FieldStorage {
public:
    explicit ScalarField(const PeriodicGrid& grid, double fill = 0.0)
        : FieldStorage(grid, 1, fill) {}

    double& operator[](std::size_t node) { return raw()[node]; }
    double operator[](std::size_t node) const { return raw()[node]; }

    double* data() { return raw().data(); }
    const double* data() const { return raw().data(); }

    /// Samples f(x) at every node.
    static ScalarField sample(const PeriodicGrid& grid,
                              const std::function<double(const std::array<double, 4>&)>& f) {
        ScalarField u(grid);
        const std::size_t m = grid.node_count();
        for (std::size_t p = 0; p < m; ++p) u[p] = f(grid.node_coords(p));
        return u;
    }
};

/// Covariant 1-form field, one real component per axis.
class OneFormField : public detail::FieldStorage {
public:
    explicit OneFormField(const PeriodicGrid& grid, double fill = 0.0)
        : FieldStorage(grid, grid.dim(), fill) {}

    double& at(int i, std::size_t node) { return comp(i)[node]; }
    double at(int i, std::size_t node) const { return comp(i)[node]; }
};

/** Symmetric covariant 2-tensor field.  Only the upper triangle is stored,
 *  so g_ij == g_ji holds exactly by construction. */
class SymTensor2Field : public detail::FieldStorage {
public:
    explicit SymTensor2Field(const PeriodicGrid& grid, double fill = 0.0)
        : FieldStorage(grid, sym_count(grid.dim()), fill) {}

    double& at(int i, int j, std::size_t node) {
        return comp(sym_index(grid().dim(), i, j))[node];
    }
    double at(int i, int j, std::size_t node) const {
        return comp(sym_index(grid().dim(), i, j))[node];
    }

    double* pair(int i, int j) { return comp(sym_index(grid().dim(), i, j)); }
    const double* pair(int i, int j) const { return comp(sym_index(grid().dim(), i, j)); }

    /// Identity tensor delta_ij.
    static SymTensor2Field identity(const PeriodicGrid& grid) {
        SymTensor2Field t(grid);
        const std::size_t m = grid.node_count();
        for (int i = 0; i < grid.dim(); ++i) {
            double* c = t.pair(i, i);
            for (std::size_t p = 0; p < m; ++p) c[p] = 1.0;
        }
        return t;
    }
};

/** Rank-3 field T_{a(ij)} symmetric in the trailing pair; used for
 *  Christoffel symbols (index a up) and for nabla_a h_ij (index a down). */
class Tensor3SymField : public detail::FieldStorage {
public:
    explicit Tensor3SymField(const PeriodicGrid& grid, double fill = 0.0)
        : FieldStorage(grid, grid.dim() * sym_count(grid.dim()), fill) {}

    int comp_index(int a, int i, int j) const {
        return a * sym_count(grid().dim()) + sym_index(grid().dim(), i, j);
    }
    double& at(int a, int i, int j, std::size_t node) {
        return comp(comp_index(a, i, j))[node];
    }
    double at(int a, int i, int j, std::size_t node) const {
        return comp(comp_index(a, i, j))[node];
    }
    double* slot(int a, int i, int j) { return comp(comp_index(a, i, j)); }
    const double* slot(int a, int i, int j) const { return comp(comp_index(a, i, j)); }
};

/** Fully covariant rank-4 tensor field with dense n^4 storage; curvature
 *  symmetries are properties of the values, not the layout. */
class Tensor4Field : public detail::FieldStorage {
public:
    explicit Tensor4Field(const PeriodicGrid& grid, double fill = 0.0)
        : FieldStorage(grid, grid.dim() * grid.dim() * grid.dim() * grid.dim(), fill) {}

    int comp_index(int i, int j, int k, int l) const {
        const int n = grid().dim();
        return ((i * n + j) * n + k) * n + l;
    }
    double& at(int i, int j, int k, int l, std::size_t node) {
        return comp(comp_index(i, j, k, l))[node];
    }
    double at(int i, int j, int k, int l, std::size_t node) const {
        return comp(comp_index(i, j, k, l))[node];
    }
};

} // namespace qlab

#endif
