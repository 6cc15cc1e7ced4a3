#ifndef QLAB_SPECTRAL_HPP
#define QLAB_SPECTRAL_HPP

#include "qlab/field.hpp"

#include <functional>

namespace qlab {

/** Exact derivative of the trigonometric interpolant along one axis.
 *  The Nyquist mode N/2 is mapped to zero (real-signal convention). */
ScalarField spectral_derivative(const ScalarField& u, int axis);

/// All first derivatives in one pass (one forward transform).
OneFormField spectral_gradient(const ScalarField& u);

/// Flat second derivatives d_i d_j u for all pairs in one pass.
SymTensor2Field spectral_hessian(const ScalarField& u);

/// Fourier multiplier -|k|^2 (Nyquist-zeroed wavenumbers).
ScalarField flat_laplacian(const ScalarField& u);

/** Applies a real isotropic-in-spectrum multiplier m(k) where k is the
 *  integer wavenumber vector (Nyquist components already zeroed). */
ScalarField apply_mode_multiplier(
    const ScalarField& u,
    const std::function<double(const std::array<int, 4>&)>& multiplier);

/** Solves m(k)*phi_hat = rhs_hat mode-wise, dropping modes with m(k) == 0
 *  (those components of rhs are annihilated).  Used for the flat
 *  bi-Laplacian and the flat composed-symbol solves. */
ScalarField solve_mode_multiplier(
    const ScalarField& rhs,
    const std::function<double(const std::array<int, 4>&)>& multiplier);

/// Mean of the field over the nodes (k = 0 Fourier coefficient).
double node_mean(const ScalarField& u);

/// u minus its node mean.
ScalarField subtract_node_mean(const ScalarField& u);

} // namespace qlab

#endif
