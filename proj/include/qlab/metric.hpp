#ifndef QLAB_METRIC_HPP
#define QLAB_METRIC_HPP

#include "qlab/field.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace qlab {

enum class MetricPreset { flat, conformal, general };

/** Riemannian metric sampled on the grid: a symmetric positive-definite
 *  2-tensor per node (eigenvalue floor 1e-10, checked at construction).
 *
 *  The nodewise inverse and sqrt(det g) are computed eagerly; Christoffel
 *  symbols and the Ricci/scalar pair are derived lazily and shared between
 *  copies, so repeated operator applications on one background reuse them.
 *  Conformal presets hold g_ij = e^{2 phi} delta_ij exactly by
 *  construction. */
class MetricField {
public:
    static constexpr double spd_floor = 1e-10;

    static MetricField flat(const PeriodicGrid& grid);
    static MetricField conformal(const ScalarField& phi);
    static MetricField general(const SymTensor2Field& components);

    /// e^{2 psi} * (this metric); preserves the conformal preset tag.
    MetricField conformally_scaled(const ScalarField& psi) const;

    const PeriodicGrid& grid() const { return components_.grid(); }
    int dim() const { return components_.grid().dim(); }
    MetricPreset preset() const { return preset_; }
    const std::optional<ScalarField>& conformal_factor() const { return phi_; }

    const SymTensor2Field& components() const { return components_; }
    const SymTensor2Field& inverse() const { return inverse_; }
    const ScalarField& sqrt_det() const { return sqrt_det_; }
    double min_eigenvalue() const { return min_eig_; }

    /// Total volume of the torus under this metric.
    double volume() const;

    /// Christoffel symbols of the Levi-Civita connection (lazy, shared).
    const Tensor3SymField& christoffel() const;

    /// Ricci tensor and scalar curvature (lazy, shared).
    const SymTensor2Field& ricci() const;
    const ScalarField& scalar_curvature() const;

private:
    MetricField(SymTensor2Field components, MetricPreset preset,
                std::optional<ScalarField> phi);

    struct LazyGeometry;

    SymTensor2Field components_;
    SymTensor2Field inverse_;
    ScalarField sqrt_det_;
    double min_eig_;
    MetricPreset preset_;
    std::optional<ScalarField> phi_;
    std::shared_ptr<LazyGeometry> lazy_;
};

std::string to_string(MetricPreset preset);

} // namespace qlab

#endif
