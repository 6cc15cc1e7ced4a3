#include "qlab/spectral.hpp"

#include <fftw3.h>

#include <complex>
#include <map>
#include <memory>
#include <mutex>

namespace qlab {
namespace {

/** One cached FFTW workspace per (dim, N): a forward and a backward
 *  complex-to-complex plan on private buffers.  Plans use FFTW_ESTIMATE so
 *  planning is deterministic and does not touch the data.  All access is
 *  serialized through a mutex; the numerics below are cheap enough that
 *  transform calls dominate. */
class SpectralEngine {
public:
    explicit SpectralEngine(const PeriodicGrid& grid)
        : dim_(grid.dim()), n_(grid.points_per_axis()), m_(grid.node_count()) {
        in_ = fftw_alloc_complex(m_);
        out_ = fftw_alloc_complex(m_);
        int sizes[4] = {n_, n_, n_, n_};
        fwd_ = fftw_plan_dft(dim_, sizes, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft(dim_, sizes, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    ~SpectralEngine() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }

    SpectralEngine(const SpectralEngine&) = delete;
    SpectralEngine& operator=(const SpectralEngine&) = delete;

    /// Integer wavenumber of mode index a, with the Nyquist mode sent to 0.
    int wavenumber(int a) const {
        if (2 * a == n_) return 0;
        return a <= n_ / 2 ? a : a - n_;
    }

    std::mutex& mutex() { return mutex_; }

    /// Forward transform of a real field into spec_ (unnormalized).
    void forward(const double* src) {
        for (std::size_t p = 0; p < m_; ++p) {
            in_[p][0] = src[p];
            in_[p][1] = 0.0;
        }
        fftw_execute(fwd_);
        spec_.assign(reinterpret_cast<std::complex<double>*>(out_),
                     reinterpret_cast<std::complex<double>*>(out_) + m_);
    }

    /** Multiplies the stored spectrum by factor(k) and inverse-transforms
     *  into dst (real part, normalized by 1/M). */
    void inverse_with_factor(
        const std::function<std::complex<double>(const std::array<int, 4>&)>& factor,
        double* dst) {
        std::array<int, 4> k{0, 0, 0, 0};
        std::array<int, 4> a{0, 0, 0, 0};
        for (std::size_t p = 0; p < m_; ++p) {
            for (int d = 0; d < dim_; ++d) k[d] = wavenumber(a[d]);
            const std::complex<double> w = factor(k) * spec_[p];
            in_[p][0] = w.real();
            in_[p][1] = w.imag();
            // odometer over mode indices, last axis fastest
            for (int d = dim_ - 1; d >= 0; --d) {
                if (++a[d] < n_) break;
                a[d] = 0;
            }
        }
        fftw_execute(bwd_);
        const double scale = 1.0 / static_cast<double>(m_);
        for (std::size_t p = 0; p < m_; ++p) dst[p] = out_[p][0] * scale;
    }

private:
    int dim_;
    int n_;
    std::size_t m_;
    fftw_complex* in_;
    fftw_complex* out_;
    fftw_plan fwd_;
    fftw_plan bwd_;
    std::vector<std::complex<double>> spec_;
    std::mutex mutex_;
};

SpectralEngine& engine_for(const PeriodicGrid& grid) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<SpectralEngine>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(grid.dim(), grid.points_per_axis());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SpectralEngine>(grid)).first;
    return *it->second;
}

} // namespace

ScalarField spectral_derivative(const ScalarField& u, int axis) {
    if (axis < 0 || axis >= u.grid().dim())
        throw std::invalid_argument("spectral_derivative: axis out of range");
    ScalarField du(u.grid());
    auto& eng = engine_for(u.grid());
    std::lock_guard<std::mutex> lock(eng.mutex());
    eng.forward(u.data());
    eng.inverse_with_factor(
        [axis](const std::array<int, 4>& k) {
            return std::complex<double>(0.0, static_cast<double>(k[axis]));
        },
        du.data());
    return du;
}

OneFormField spectral_gradient(const ScalarField& u) {
    OneFormField grad(u.grid());
    auto& eng = engine_for(u.grid());
    std::lock_guard<std::mutex> lock(eng.mutex());
    eng.forward(u.data());
    for (int d = 0; d < u.grid().dim(); ++d) {
        eng.inverse_with_factor(
            [d](const std::array<int, 4>& k) {
                return std::complex<double>(0.0, static_cast<double>(k[d]));
            },
            grad.comp(d));
    }
    return grad;
}

SymTensor2Field spectral_hessian(const ScalarField& u) {
    SymTensor2Field hess(u.grid());
    auto& eng = engine_for(u.grid());
    std::lock_guard<std::mutex> lock(eng.mutex());
    eng.forward(u.data());
    const int n = u.grid().dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            eng.inverse_with_factor(
                [i, j](const std::array<int, 4>& k) {
                    return std::complex<double>(
                        -static_cast<double>(k[i]) * static_cast<double>(k[j]), 0.0);
                },
                hess.pair(i, j));
        }
    return hess;
}

ScalarField flat_laplacian(const ScalarField& u) {
    return apply_mode_multiplier(u, [](const std::array<int, 4>& k) {
        double k2 = 0.0;
        for (int d = 0; d < 4; ++d) k2 += static_cast<double>(k[d]) * k[d];
        return -k2;
    });
}

ScalarField apply_mode_multiplier(
    const ScalarField& u,
    const std::function<double(const std::array<int, 4>&)>& multiplier) {
    ScalarField v(u.grid());
    auto& eng = engine_for(u.grid());
    std::lock_guard<std::mutex> lock(eng.mutex());
    eng.forward(u.data());
    eng.inverse_with_factor(
        [&multiplier](const std::array<int, 4>& k) {
            return std::complex<double>(multiplier(k), 0.0);
        },
        v.data());
    return v;
}

ScalarField solve_mode_multiplier(
    const ScalarField& rhs,
    const std::function<double(const std::array<int, 4>&)>& multiplier) {
    ScalarField v(rhs.grid());
    auto& eng = engine_for(rhs.grid());
    std::lock_guard<std::mutex> lock(eng.mutex());
    eng.forward(rhs.data());
    eng.inverse_with_factor(
        [&multiplier](const std::array<int, 4>& k) {
            const double m = multiplier(k);
            return std::complex<double>(m == 0.0 ? 0.0 : 1.0 / m, 0.0);
        },
        v.data());
    return v;
}

double node_mean(const ScalarField& u) {
    long double acc = 0.0L;
    for (std::size_t p = 0; p < u.node_count(); ++p) acc += u[p];
    return static_cast<double>(acc / static_cast<long double>(u.node_count()));
}

ScalarField subtract_node_mean(const ScalarField& u) {
    const double mean = node_mean(u);
    ScalarField v(u.grid());
    for (std::size_t p = 0; p < u.node_count(); ++p) v[p] = u[p] - mean;
    return v;
}

} // namespace qlab
