#include "fraccable/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fraccable {

// ---------------------------------------------------------------------------
// BandedSymMatrix

BandedSymMatrix::BandedSymMatrix(int order, int bandwidth)
    : order_(order), bandwidth_(bandwidth),
      bands_(static_cast<std::size_t>(bandwidth + 1) * order, 0.0)
{
    if (order < 1) throw std::invalid_argument("BandedSymMatrix: order must be positive");
    if (bandwidth < 0 || bandwidth >= order)
        bandwidth_ = std::max(0, std::min(bandwidth, order - 1));
}

double& BandedSymMatrix::ref(int i, int j)
{
    const int d = i - j;
    return bands_[static_cast<std::size_t>(d) * order_ + j];
}

double BandedSymMatrix::at(int i, int j) const
{
    if (i < j) std::swap(i, j);
    const int d = i - j;
    if (d > bandwidth_) return 0.0;
    return bands_[static_cast<std::size_t>(d) * order_ + j];
}

void BandedSymMatrix::set(int i, int j, double value)
{
    if (i < j) std::swap(i, j);
    if (i - j > bandwidth_) throw std::invalid_argument("BandedSymMatrix::set outside band");
    ref(i, j) = value;
}

void BandedSymMatrix::add(int i, int j, double value)
{
    if (i < j) std::swap(i, j);
    if (i - j > bandwidth_) throw std::invalid_argument("BandedSymMatrix::add outside band");
    ref(i, j) += value;
}

std::vector<double> BandedSymMatrix::multiply(std::span<const double> x) const
{
    std::vector<double> y(order_, 0.0);
    multiply_add(x, 1.0, y);
    return y;
}

void BandedSymMatrix::multiply_add(std::span<const double> x, double scale,
                                   std::span<double> y) const
{
    const double* diag = bands_.data();
    for (int i = 0; i < order_; ++i) y[i] += scale * diag[i] * x[i];
    for (int d = 1; d <= bandwidth_; ++d) {
        const double* band = bands_.data() + static_cast<std::size_t>(d) * order_;
        for (int j = 0; j + d < order_; ++j) {
            const double v = scale * band[j];
            y[j + d] += v * x[j];
            y[j] += v * x[j + d];
        }
    }
}

std::vector<double> BandedSymMatrix::to_dense() const
{
    std::vector<double> a(static_cast<std::size_t>(order_) * order_, 0.0);
    for (int i = 0; i < order_; ++i)
        for (int j = std::max(0, i - bandwidth_); j <= std::min(order_ - 1, i + bandwidth_); ++j)
            a[static_cast<std::size_t>(i) * order_ + j] = at(i, j);
    return a;
}

BandedSymMatrix linear_combination(double a, const BandedSymMatrix& A,
                                   double b, const BandedSymMatrix& B)
{
    if (A.order() != B.order() || A.bandwidth() != B.bandwidth())
        throw std::invalid_argument("linear_combination: shape mismatch");
    BandedSymMatrix out(A.order(), A.bandwidth());
    for (std::size_t k = 0; k < out.bands_.size(); ++k)
        out.bands_[k] = a * A.bands_[k] + b * B.bands_[k];
    return out;
}

// ---------------------------------------------------------------------------
// BandedCholesky

BandedCholesky::BandedCholesky(const BandedSymMatrix& a)
    : l_(a.order(), a.bandwidth())
{
    const int n = a.order();
    const int bw = a.bandwidth();
    for (int j = 0; j < n; ++j) {
        double s = a.at(j, j);
        for (int k = std::max(0, j - bw); k < j; ++k) {
            const double ljk = l_.at(j, k);
            s -= ljk * ljk;
        }
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::runtime_error("BandedCholesky: matrix is not positive definite");
        const double ljj = std::sqrt(s);
        l_.ref(j, j) = ljj;
        for (int i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
            double t = a.at(i, j);
            for (int k = std::max(0, i - bw); k < j; ++k)
                t -= l_.at(i, k) * l_.at(j, k);
            l_.ref(i, j) = t / ljj;
        }
    }
}

void BandedCholesky::solve_inplace(std::span<double> b) const
{
    const int n = l_.order();
    const int bw = l_.bandwidth();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("BandedCholesky::solve size mismatch");
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = std::max(0, i - bw); k < i; ++k) s -= l_.at(i, k) * b[k];
        b[i] = s / l_.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k <= std::min(n - 1, i + bw); ++k) s -= l_.at(k, i) * b[k];
        b[i] = s / l_.at(i, i);
    }
}

std::vector<double> BandedCholesky::solve(std::span<const double> b) const
{
    std::vector<double> x(b.begin(), b.end());
    solve_inplace(x);
    return x;
}

// ---------------------------------------------------------------------------
// BandedMatrix / BandedLU

BandedMatrix::BandedMatrix(int order, int lower, int upper)
    : order_(order), lower_(lower), upper_(upper),
      store_(static_cast<std::size_t>(lower + upper + 1) * order, 0.0)
{
    if (order < 1 || lower < 0 || upper < 0)
        throw std::invalid_argument("BandedMatrix: bad shape");
}

double BandedMatrix::at(int i, int j) const
{
    const int d = i - j;
    if (d > lower_ || -d > upper_) return 0.0;
    return store_[static_cast<std::size_t>(d + upper_) * order_ + j];
}

void BandedMatrix::set(int i, int j, double value)
{
    const int d = i - j;
    if (d > lower_ || -d > upper_) throw std::invalid_argument("BandedMatrix::set outside band");
    store_[static_cast<std::size_t>(d + upper_) * order_ + j] = value;
}

void BandedMatrix::add(int i, int j, double value)
{
    const int d = i - j;
    if (d > lower_ || -d > upper_) throw std::invalid_argument("BandedMatrix::add outside band");
    store_[static_cast<std::size_t>(d + upper_) * order_ + j] += value;
}

std::vector<double> BandedMatrix::to_dense() const
{
    std::vector<double> a(static_cast<std::size_t>(order_) * order_, 0.0);
    for (int i = 0; i < order_; ++i)
        for (int j = std::max(0, i - lower_); j <= std::min(order_ - 1, i + upper_); ++j)
            a[static_cast<std::size_t>(i) * order_ + j] = at(i, j);
    return a;
}

double& BandedLU::fat(int i, int j)
{
    return f_[static_cast<std::size_t>(i - j + ku_ + kl_) * n_ + j];
}

double BandedLU::fat(int i, int j) const
{
    return f_[static_cast<std::size_t>(i - j + ku_ + kl_) * n_ + j];
}

BandedLU::BandedLU(const BandedMatrix& a)
    : n_(a.order()), kl_(a.lower()), ku_(a.upper()),
      f_(static_cast<std::size_t>(2 * a.lower() + a.upper() + 1) * a.order(), 0.0),
      pivot_(a.order(), 0)
{
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
            fat(i, j) = a.at(i, j);

    const int uw = ku_ + kl_;  // upper width after fill-in
    for (int k = 0; k < n_; ++k) {
        int p = k;
        double best = std::abs(fat(k, k));
        for (int i = k + 1; i <= std::min(n_ - 1, k + kl_); ++i) {
            const double v = std::abs(fat(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best == 0.0) throw std::runtime_error("BandedLU: singular matrix");
        pivot_[k] = p;
        if (p != k)
            for (int j = k; j <= std::min(n_ - 1, k + uw); ++j)
                std::swap(fat(k, j), fat(p, j));
        const double akk = fat(k, k);
        for (int i = k + 1; i <= std::min(n_ - 1, k + kl_); ++i) {
            const double m = fat(i, k) / akk;
            fat(i, k) = m;
            if (m != 0.0)
                for (int j = k + 1; j <= std::min(n_ - 1, k + uw); ++j)
                    fat(i, j) -= m * fat(k, j);
        }
    }
}

void BandedLU::solve_inplace(std::span<double> b) const
{
    if (static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("BandedLU::solve size mismatch");
    for (int k = 0; k < n_; ++k) {
        if (pivot_[k] != k) std::swap(b[k], b[pivot_[k]]);
        for (int i = k + 1; i <= std::min(n_ - 1, k + kl_); ++i)
            b[i] -= fat(i, k) * b[k];
    }
    const int uw = ku_ + kl_;
    for (int i = n_ - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j <= std::min(n_ - 1, i + uw); ++j) s -= fat(i, j) * b[j];
        b[i] = s / fat(i, i);
    }
}

std::vector<double> BandedLU::solve(std::span<const double> b) const
{
    std::vector<double> x(b.begin(), b.end());
    solve_inplace(x);
    return x;
}

// ---------------------------------------------------------------------------
// DenseLU

DenseLU::DenseLU(std::vector<double> a, int n)
    : n_(n), lu_(std::move(a)), piv_(n, 0), norm1_(0.0)
{
    if (static_cast<int>(lu_.size()) != n * n)
        throw std::invalid_argument("DenseLU: size mismatch");
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(lu_[static_cast<std::size_t>(i) * n + j]);
        norm1_ = std::max(norm1_, col);
    }
    auto A = [&](int i, int j) -> double& { return lu_[static_cast<std::size_t>(i) * n_ + j]; };
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(A(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); p = i; }
        if (best == 0.0) throw std::runtime_error("DenseLU: singular matrix");
        piv_[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
        for (int i = k + 1; i < n; ++i) {
            const double m = A(i, k) / A(k, k);
            A(i, k) = m;
            for (int j = k + 1; j < n; ++j) A(i, j) -= m * A(k, j);
        }
    }
}

void DenseLU::solve_inplace(std::span<double> b) const
{
    if (static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("DenseLU::solve size mismatch");
    auto A = [&](int i, int j) { return lu_[static_cast<std::size_t>(i) * n_ + j]; };
    for (int k = 0; k < n_; ++k) {
        if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
        for (int i = k + 1; i < n_; ++i) b[i] -= A(i, k) * b[k];
    }
    for (int i = n_ - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n_; ++j) s -= A(i, j) * b[j];
        b[i] = s / A(i, i);
    }
}

std::vector<double> DenseLU::solve(std::span<const double> b) const
{
    std::vector<double> x(b.begin(), b.end());
    solve_inplace(x);
    return x;
}

double DenseLU::condition_estimate() const
{
    double inv_norm = 0.0;
    std::vector<double> e(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        solve_inplace(e);
        double col = 0.0;
        for (double v : e) col += std::abs(v);
        inv_norm = std::max(inv_norm, col);
    }
    return norm1_ * inv_norm;
}

// ---------------------------------------------------------------------------
// Symmetric eigensolver: Householder tridiagonalization + implicit QL.

namespace {

void householder_tridiag(std::vector<double>& a, int n,
                         std::vector<double>& d, std::vector<double>& e,
                         bool accumulate)
{
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    A(j, i) = A(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    const double gg = e[j] - hh * f;
                    e[j] = gg;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + gg * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (accumulate && d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
                for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
            }
        }
        d[i] = A(i, i);
        if (accumulate) {
            A(i, i) = 1.0;
            for (int j = 0; j <= l; ++j) {
                A(j, i) = 0.0;
                A(i, j) = 0.0;
            }
        }
    }
}

void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n,
                std::vector<double>* z)
{
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("sym_eigen_dense: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            auto& zk_i1 = (*z)[static_cast<std::size_t>(k) * n + i + 1];
                            auto& zk_i = (*z)[static_cast<std::size_t>(k) * n + i];
                            f = zk_i1;
                            zk_i1 = s * zk_i + c * f;
                            zk_i = c * zk_i - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Eigensystem sym_eigen_dense(std::vector<double> a, int n)
{
    if (static_cast<int>(a.size()) != n * n || n < 1)
        throw std::invalid_argument("sym_eigen_dense: size mismatch");
    std::vector<double> d(n, 0.0), e(n, 0.0);
    householder_tridiag(a, n, d, e, true);
    tridiag_ql(d, e, n, &a);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int p, int q) { return d[p] < d[q]; });

    Eigensystem out;
    out.n = n;
    out.values.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[idx[j]];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(j) * n + i] =
                a[static_cast<std::size_t>(i) * n + idx[j]];
    }
    return out;
}

std::vector<double> sym_eigenvalues(std::vector<double> a, int n)
{
    if (static_cast<int>(a.size()) != n * n || n < 1)
        throw std::invalid_argument("sym_eigenvalues: size mismatch");
    std::vector<double> d(n, 0.0), e(n, 0.0);
    householder_tridiag(a, n, d, e, false);
    tridiag_ql(d, e, n, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace fraccable
