#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace alphatough {

/// Dense real symmetric matrix, assembled exactly symmetric.
class SymMatrix {
public:
    explicit SymMatrix(int order) : k_(order), e_(static_cast<std::size_t>(order) * order, 0.0) {
        if (order < 1) throw std::invalid_argument("SymMatrix: order must be positive");
    }

    int order() const { return k_; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * k_ + j]; }

    /// Writes both (i,j) and (j,i).
    void set(int i, int j, double value) {
        e_[static_cast<std::size_t>(i) * k_ + j] = value;
        e_[static_cast<std::size_t>(j) * k_ + i] = value;
    }

    double inf_norm() const {
        double best = 0.0;
        for (int i = 0; i < k_; ++i) {
            double row = 0.0;
            for (int j = 0; j < k_; ++j) row += std::abs((*this)(i, j));
            best = std::max(best, row);
        }
        return best;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < k_; ++i) t += (*this)(i, i);
        return t;
    }

    const std::vector<double>& data() const { return e_; }

private:
    int k_;
    std::vector<double> e_;
};

/// Eigenvalues in nonincreasing order; rho() is the largest.
struct Spectrum {
    std::vector<double> eigenvalues;
    double rho() const { return eigenvalues.front(); }
};

namespace detail {

// Householder reduction of a symmetric matrix (row-major, modified in
// place) to tridiagonal form; eigenvalues-only variant, so no transform
// accumulation. d gets the diagonal, e the subdiagonal in e[1..n-1].
inline void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                           std::vector<double>& e) {
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Implicit-shift QL iteration on a tridiagonal matrix; d holds the
// eigenvalues on exit (unsorted).
inline void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("full_spectrum: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    e[i + 1] = (r = std::hypot(f, g));
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix, sorted nonincreasing.
inline Spectrum full_spectrum(const SymMatrix& m) {
    int n = m.order();
    Spectrum result;
    if (n == 1) {
        result.eigenvalues = {m(0, 0)};
        return result;
    }
    std::vector<double> a = m.data();
    std::vector<double> d(n), e(n);
    detail::tridiagonalize(a, n, d, e);
    detail::ql_implicit_shift(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<double>());
    result.eigenvalues = std::move(d);
    return result;
}

}  // namespace alphatough
