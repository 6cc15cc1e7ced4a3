#ifndef QLAB_GRID_HPP
#define QLAB_GRID_HPP

#include <array>
#include <cstddef>
#include <stdexcept>

namespace qlab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/** Uniform periodic grid on the flat torus [0,2pi)^dim.
 *
 * Nodes sit at x_a = a*spacing along each axis, a = 0..N-1, with
 * spacing = 2pi/N.  Integer wavenumbers per axis run over
 * {-N/2+1,...,N/2}; the N/2 (Nyquist) mode is annihilated by
 * differentiation.  N must be even and >= 8, dim in {2,3,4}. */
class PeriodicGrid {
public:
    PeriodicGrid(int dim, int points_per_axis)
        : dim_(dim), n_(points_per_axis) {
        if (dim < 2 || dim > 4)
            throw std::invalid_argument("PeriodicGrid: dim must be 2, 3 or 4");
        if (points_per_axis < 8 || points_per_axis % 2 != 0)
            throw std::invalid_argument(
                "PeriodicGrid: points_per_axis must be even and >= 8");
    }

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double spacing() const { return kTwoPi / n_; }
    double period() const { return kTwoPi; }

    std::size_t node_count() const {
        std::size_t m = 1;
        for (int d = 0; d < dim_; ++d) m *= static_cast<std::size_t>(n_);
        return m;
    }

    /// Quadrature weight of one node, spacing^dim.
    double cell_volume() const {
        double w = 1.0;
        for (int d = 0; d < dim_; ++d) w *= spacing();
        return w;
    }

    double coord(int index_along_axis) const { return index_along_axis * spacing(); }

    /// Row-major flattening; axis 0 is the slowest index.
    std::size_t flatten(const std::array<int, 4>& a) const {
        std::size_t idx = 0;
        for (int d = 0; d < dim_; ++d)
            idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a[d]);
        return idx;
    }

    std::array<int, 4> unflatten(std::size_t idx) const {
        std::array<int, 4> a{0, 0, 0, 0};
        for (int d = dim_ - 1; d >= 0; --d) {
            a[d] = static_cast<int>(idx % static_cast<std::size_t>(n_));
            idx /= static_cast<std::size_t>(n_);
        }
        return a;
    }

    std::array<double, 4> node_coords(std::size_t idx) const {
        auto a = unflatten(idx);
        std::array<double, 4> x{0, 0, 0, 0};
        for (int d = 0; d < dim_; ++d) x[d] = coord(a[d]);
        return x;
    }

    friend bool operator==(const PeriodicGrid& a, const PeriodicGrid& b) {
        return a.dim_ == b.dim_ && a.n_ == b.n_;
    }
    friend bool operator!=(const PeriodicGrid& a, const PeriodicGrid& b) {
        return !(a == b);
    }

private:
    int dim_;
    int n_;
};

inline void require_same_grid(const PeriodicGrid& a, const PeriodicGrid& b,
                              const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

} // namespace qlab

#endif
