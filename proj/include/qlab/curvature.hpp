#ifndef QLAB_CURVATURE_HPP
#define QLAB_CURVATURE_HPP

#include "qlab/metric.hpp"

namespace qlab {

/** Curvature data of one metric.
 *
 *  Conventions (fixed once, used everywhere):
 *    R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
 *    R_ijkl  = < R(e_i,e_j) e_l , e_k >   (lowered into the third slot),
 *    Ric_jl  = g^{ik} R_ijkl,   R = g^{jl} Ric_jl.
 *  With these choices the round unit sphere has Riem = 1/2 g (x) g under the
 *  Kulkarni-Nomizu product, Ric = +(n-1) g, R = n(n-1), and the Weyl part of
 *  the standard curvature decomposition vanishes on conformally flat
 *  metrics.  The curvature action on symmetric 2-tensors is
 *    (Rm . h)_jk = R_jikl h^{il},
 *  which satisfies (Rm . g) = Ric. */
struct CurvatureBundle {
    Tensor3SymField christoffel; // Gamma^k_ij, upper index first slot
    Tensor4Field riemann;        // R_ijkl
    SymTensor2Field ricci;
    ScalarField scalar;
    Tensor4Field weyl;           // zero field when dim == 3
};

/// Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
const Tensor3SymField& christoffel(const MetricField& g);

/// Full curvature pipeline; dense rank-4 storage (use with dim<=3 or N<=16).
CurvatureBundle curvature_bundle(const MetricField& g);

/// (A (x) B)_ijkl = A_ik B_jl + A_jl B_ik - A_il B_jk - A_jk B_il.
Tensor4Field kulkarni_nomizu(const SymTensor2Field& a, const SymTensor2Field& b);

/** |W_g|^2 as a scalar field without materializing the Weyl tensor: the
 *  Riemann tensor is built once and the two Kulkarni-Nomizu blocks are
 *  subtracted per node.  This keeps the 4D N=24 verification runs inside
 *  the memory budget. */
ScalarField weyl_norm2_field(const MetricField& g);

/// |Riem_g|^2 as a scalar field, streaming like weyl_norm2_field.
ScalarField riemann_norm2_field(const MetricField& g);

/// (Rm . h)_jk = R_jikl h^{il} for the bundle's Riemann tensor.
SymTensor2Field riemann_action(const CurvatureBundle& bundle, const MetricField& g,
                               const SymTensor2Field& h);

} // namespace qlab

#endif
