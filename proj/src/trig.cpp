#include "qlab/trig.hpp"

#include <cmath>
#include <cstdlib>

namespace qlab {

ScalarField sample_trig(const PeriodicGrid& grid, const TrigPoly& poly) {
    ScalarField u(grid);
    const std::size_t m = grid.node_count();
    for (const TrigTerm& term : poly) {
        for (std::size_t p = 0; p < m; ++p) {
            const auto x = grid.node_coords(p);
            double phase = 0.0;
            for (int d = 0; d < grid.dim(); ++d) phase += term.mode[d] * x[d];
            u[p] += term.coefficient * (term.sine ? std::sin(phase) : std::cos(phase));
        }
    }
    return u;
}

int max_mode(const TrigPoly& poly) {
    int k = 0;
    for (const TrigTerm& term : poly)
        for (int d = 0; d < 4; ++d) k = std::max(k, std::abs(term.mode[d]));
    return k;
}

double coefficient_l1(const TrigPoly& poly) {
    double s = 0.0;
    for (const TrigTerm& term : poly) s += std::abs(term.coefficient);
    return s;
}

} // namespace qlab
