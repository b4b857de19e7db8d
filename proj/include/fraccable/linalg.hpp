#pragma once

#include <span>
#include <vector>

namespace fraccable {

/// Symmetric banded matrix in packed lower storage. Entry (i, j) with
/// 0 <= i - j <= bandwidth lives in band (i - j); everything further
/// from the diagonal is implicitly zero.
class BandedSymMatrix {
public:
    BandedSymMatrix(int order, int bandwidth);

    int order() const { return order_; }
    int bandwidth() const { return bandwidth_; }

    double at(int i, int j) const;
    void set(int i, int j, double value);
    void add(int i, int j, double value);

    std::vector<double> multiply(std::span<const double> x) const;

    /// y += scale * A x
    void multiply_add(std::span<const double> x, double scale, std::span<double> y) const;

    std::vector<double> to_dense() const;

private:
    friend class BandedCholesky;
    friend BandedSymMatrix linear_combination(double, const BandedSymMatrix&,
                                              double, const BandedSymMatrix&);

    int order_;
    int bandwidth_;
    std::vector<double> bands_;  // (bandwidth + 1) * order, band d at offset d * order

    double& ref(int i, int j);
};

/// a * A + b * B for matrices of identical order and bandwidth.
BandedSymMatrix linear_combination(double a, const BandedSymMatrix& A,
                                   double b, const BandedSymMatrix& B);

/// Cholesky factorization of a banded SPD matrix; the factor keeps the
/// bandwidth of the input. Throws std::runtime_error on a nonpositive pivot.
class BandedCholesky {
public:
    explicit BandedCholesky(const BandedSymMatrix& a);

    int order() const { return l_.order(); }
    void solve_inplace(std::span<double> b) const;
    std::vector<double> solve(std::span<const double> b) const;

private:
    BandedSymMatrix l_;
};

/// General (nonsymmetric) banded matrix with `lower` sub- and `upper`
/// super-diagonals.
class BandedMatrix {
public:
    BandedMatrix(int order, int lower, int upper);

    int order() const { return order_; }
    int lower() const { return lower_; }
    int upper() const { return upper_; }

    double at(int i, int j) const;
    void set(int i, int j, double value);
    void add(int i, int j, double value);

    std::vector<double> to_dense() const;

private:
    int order_, lower_, upper_;
    std::vector<double> store_;  // (lower + upper + 1) * order, diagonal offset-major
};

/// LU factorization with partial pivoting for banded systems; pivoting can
/// fill up to `lower` extra super-diagonals.
class BandedLU {
public:
    explicit BandedLU(const BandedMatrix& a);

    void solve_inplace(std::span<double> b) const;
    std::vector<double> solve(std::span<const double> b) const;

private:
    int n_, kl_, ku_;
    std::vector<double> f_;    // (2*kl + ku + 1) * n
    std::vector<int> pivot_;

    double& fat(int i, int j);
    double fat(int i, int j) const;
};

/// Small dense LU with partial pivoting (row-major input).
class DenseLU {
public:
    DenseLU(std::vector<double> a, int n);

    int order() const { return n_; }
    void solve_inplace(std::span<double> b) const;
    std::vector<double> solve(std::span<const double> b) const;

    /// 1-norm condition number computed exactly from n inverse columns;
    /// meant for the small Vandermonde-type systems (n <= a few dozen).
    double condition_estimate() const;

private:
    int n_;
    std::vector<double> lu_;
    std::vector<int> piv_;
    double norm1_;
};

struct Eigensystem {
    int n = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column-major, vectors[j * n + i]
};

/// Full eigensystem of a dense symmetric matrix (row-major input) by
/// Householder tridiagonalization followed by implicit-shift QL.
Eigensystem sym_eigen_dense(std::vector<double> a, int n);

/// Eigenvalues only, ascending.
std::vector<double> sym_eigenvalues(std::vector<double> a, int n);

}  // namespace fraccable
