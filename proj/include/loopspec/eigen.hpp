#pragma once

// Dense symmetric eigensolver (cyclic Jacobi).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopspec/matrix.hpp"

namespace loopspec {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues ascending; column k of `vectors` pairs with values[k].
struct Spectrum {
    std::vector<double> values;
    DenseMatrix<double> vectors;
    /// max_k ‖M v_k − λ_k v_k‖
    double residual = 0.0;
    /// max |VᵀV − I|
    double orthonormality_defect = 0.0;
    int sweeps = 0;

    std::size_t size() const noexcept { return values.size(); }

    std::vector<double> vector(std::size_t k) const {
        std::vector<double> v(vectors.rows());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
        return v;
    }

    double min() const { return values.empty() ? 0.0 : values.front(); }
    double max() const { return values.empty() ? 0.0 : values.back(); }

    double spectral_radius() const {
        return values.empty() ? 0.0 : std::max(std::abs(values.front()), std::abs(values.back()));
    }

    /// σ₊: eigenvalues strictly above `threshold`.
    std::vector<double> positive_part(double threshold) const {
        std::vector<double> out;
        std::copy_if(values.begin(), values.end(), std::back_inserter(out),
                     [&](double x) { return x > threshold; });
        return out;
    }
};

inline constexpr int kMaxJacobiSweeps = 50;

/// Full eigendecomposition by cyclic Jacobi rotations. Sweeps stop once the
/// off-diagonal Frobenius norm drops to `tol` times the Frobenius norm of `m`
/// (never below a few ulps). Throws ConvergenceError past `max_sweeps`.
template <class T>
Spectrum eigen_sym(const SymmetricMatrix<T>& m, double tol = 1e-12, int max_sweeps = kMaxJacobiSweeps) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigen_sym: tolerance must be positive");
    const std::size_t n = m.dim();
    DenseMatrix<double> a(n, n);
    DenseMatrix<double> v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = 1.0;
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
    }

    const double norm = frobenius_norm(m);
    const double target = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon()) * norm;
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    for (;; ++sweep) {
        if (off_norm() <= target) break;
        if (sweep >= max_sweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                                   " sweeps (off-diagonal norm " + std::to_string(off_norm()) + ")");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    Spectrum out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = DenseMatrix<double>(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }

    for (std::size_t k = 0; k < n; ++k) {
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double mv = 0.0;
            for (std::size_t j = 0; j < n; ++j) mv += static_cast<double>(m(i, j)) * out.vectors(j, k);
            const double d = mv - out.values[k] * out.vectors(i, k);
            r += d * d;
        }
        out.residual = std::max(out.residual, std::sqrt(r));
        for (std::size_t l = 0; l < n; ++l) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += out.vectors(i, k) * out.vectors(i, l);
            out.orthonormality_defect = std::max(out.orthonormality_defect, std::abs(dot - (k == l ? 1.0 : 0.0)));
        }
    }
    return out;
}

/// ‖V Λ Vᵀ − M‖_F
template <class T>
double reconstruction_error(const SymmetricMatrix<T>& m, const Spectrum& s) {
    const std::size_t n = m.dim();
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double x = 0.0;
            for (std::size_t k = 0; k < n; ++k) x += s.vectors(i, k) * s.values[k] * s.vectors(j, k);
            const double d = x - static_cast<double>(m(i, j));
            err += d * d;
        }
    }
    return std::sqrt(err);
}

}  // namespace loopspec
