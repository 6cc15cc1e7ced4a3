#ifndef QLAB_QUADRATURE_HPP
#define QLAB_QUADRATURE_HPP

#include "qlab/field.hpp"

namespace qlab {

class MetricField;

/// integral of u dvol_g = sum_nodes u*sqrt(det g)*spacing^dim.
double integrate(const ScalarField& u, const MetricField& g);

/// L2(dvol_g) inner products and norms; tensors are contracted with g^{-1}.
double l2_inner(const ScalarField& u, const ScalarField& v, const MetricField& g);
double l2_inner(const SymTensor2Field& h, const SymTensor2Field& t, const MetricField& g);
double l2_norm(const ScalarField& u, const MetricField& g);
double l2_norm(const SymTensor2Field& h, const MetricField& g);
double l2_norm(const OneFormField& w, const MetricField& g);

/// ||a-b||/||b|| in L2(dvol_g); returns ||a|| if b vanishes.
double rel_l2_diff(const ScalarField& a, const ScalarField& b, const MetricField& g);

/// Plain sup norms on the raw values.
double sup_norm(const ScalarField& u);
double sup_diff(const ScalarField& a, const ScalarField& b);

/// Mean of u with respect to dvol_g, integrate(u)/Vol_g.
double metric_mean(const ScalarField& u, const MetricField& g);

} // namespace qlab

#endif
