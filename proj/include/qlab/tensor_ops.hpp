#ifndef QLAB_TENSOR_OPS_HPP
#define QLAB_TENSOR_OPS_HPP

#include "qlab/curvature.hpp"

namespace qlab {

/// nabla^2 u_ij = d_i d_j u - Gamma^k_ij d_k u.
SymTensor2Field covariant_hessian(const ScalarField& u, const MetricField& g);

/// Delta_g u = g^{ij} (nabla^2 u)_ij; reduces to flat_laplacian on flat g.
ScalarField laplace_beltrami(const ScalarField& u, const MetricField& g);

/// nabla_a h_ij for symmetric h.
Tensor3SymField covariant_deriv_sym2(const SymTensor2Field& h, const MetricField& g);

/// (delta h)_i = -nabla^j h_ij (sign of the formal divergence).
OneFormField divergence_tensor(const SymTensor2Field& h, const MetricField& g);

/// delta^2 h = nabla^i nabla^j h_ij  (= delta applied twice, signs cancel).
ScalarField double_divergence(const SymTensor2Field& h, const MetricField& g);

/// nabla^i w_i (plain divergence of a 1-form; delta w = -this).
ScalarField divergence_oneform(const OneFormField& w, const MetricField& g);

/// Symmetrized covariant derivative of a 1-form: 1/2(nabla_i w_j + nabla_j w_i).
SymTensor2Field covariant_deriv_oneform_sym(const OneFormField& w, const MetricField& g);

/// Divergence of a vector field via the density form, (1/sqrt g) d_i (sqrt g v^i).
ScalarField divergence_vector(const OneFormField& v_up, const MetricField& g);

/// Bochner (rough) Laplacian on symmetric 2-tensors, g^{ab} nabla_a nabla_b h_ij.
SymTensor2Field rough_laplacian_sym2(const SymTensor2Field& h, const MetricField& g);

/** Lichnerowicz Laplacian
 *  Delta_L h_jk = Delta h_jk + 2 (Rm.h)_jk - R_ji h^i_k - R_ki h^i_j. */
SymTensor2Field lichnerowicz(const SymTensor2Field& h, const MetricField& g,
                             const CurvatureBundle& bundle);

/// Pointwise squared norms with every index pair contracted by g^{-1}.
ScalarField tensor_norm2(const ScalarField& t, const MetricField& g);
ScalarField tensor_norm2(const OneFormField& t, const MetricField& g);
ScalarField tensor_norm2(const SymTensor2Field& t, const MetricField& g);
ScalarField tensor_norm2(const Tensor4Field& t, const MetricField& g);

/// Full contraction of two symmetric 2-tensors, g^{ia} g^{jb} s_ij t_ab.
ScalarField contract2(const SymTensor2Field& s, const SymTensor2Field& t,
                      const MetricField& g);

/// Contraction of two 1-forms, g^{ij} a_i b_j.
ScalarField contract1(const OneFormField& a, const OneFormField& b, const MetricField& g);

/// trace tr_g h = g^{ij} h_ij.
ScalarField metric_trace(const SymTensor2Field& h, const MetricField& g);

/// h^i_j contracted as (s t)_ij = s_ia g^{ab} t_bj, symmetrized.
SymTensor2Field sym_product(const SymTensor2Field& s, const SymTensor2Field& t,
                            const MetricField& g);

/// Pointwise scalar * tensor helpers.
SymTensor2Field scale_sym2(const ScalarField& f, const SymTensor2Field& h);
ScalarField multiply(const ScalarField& a, const ScalarField& b);

/// a + c*b, fieldwise.
ScalarField axpy(const ScalarField& a, double c, const ScalarField& b);
SymTensor2Field axpy(const SymTensor2Field& a, double c, const SymTensor2Field& b);

} // namespace qlab

#endif
