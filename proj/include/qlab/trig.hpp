#ifndef QLAB_TRIG_HPP
#define QLAB_TRIG_HPP

#include "qlab/field.hpp"

#include <vector>

namespace qlab {

/** One term of a trigonometric polynomial:
 *  coefficient * cos(mode . x)  or  coefficient * sin(mode . x).
 *  Targets and metric parameters in scenarios are sums of these, which are
 *  exactly representable on the grid as long as every |mode| stays within
 *  the Nyquist range. */
struct TrigTerm {
    double coefficient = 0.0;
    std::array<int, 4> mode{0, 0, 0, 0};
    bool sine = false; // cosine by default; cos(0.x) == 1 encodes constants
};

using TrigPoly = std::vector<TrigTerm>;

ScalarField sample_trig(const PeriodicGrid& grid, const TrigPoly& poly);

/// Largest |mode component| across all terms.
int max_mode(const TrigPoly& poly);

/// Sum of |coefficient|, an upper bound for the sup norm.
double coefficient_l1(const TrigPoly& poly);

} // namespace qlab

#endif
