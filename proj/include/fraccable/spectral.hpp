#pragma once

#include "fraccable/weights.hpp"

#include <span>

namespace fraccable {

/// Closed-form evaluation of the generating-function symbol at one point.
/// `h` is the FBT phase function x/2 - pi/2 + phi2 - phi1 and is NaN for FBN.
struct SymbolEvaluation {
    double x = 0.0;
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
};

/// Truncated real-cosine symbol: omega_0 + sum_{k<=k_max} omega_k cos(k x).
double symbol_series(const ThetaScheme& scheme, double x, int k_max);

/// Factored magnitude-phase form of the symbol, valid on [0, 2 pi];
/// at the endpoint zeros f is exact (0) and g, h are one-sided limits.
SymbolEvaluation symbol_closed_form(const ThetaScheme& scheme, double x);

struct HThetaRange {
    double min_h = 0.0;
    double max_h = 0.0;
    bool monotone = false;
};

/// Sample the FBT phase function on [0, pi]; Lemma-level claim is
/// containment in [-pi/2, 0] and monotone growth.
HThetaRange h_theta_range_check(double theta, int n_samples);

/// H(alpha, theta) = min over [0, pi] of the phase-cosine factor g, by a
/// uniform grid plus optional golden-section refinement of the best cell.
double h_of(double alpha, double theta, Family family, int x_grid = 2001, bool refine = true);

/// Smallest eigenvalue of D_n - shift_last * E_n, where D_n is the
/// symmetric Toeplitz matrix with diagonal omega_0 and off-diagonals
/// omega_k / 2, and E_n has a single 1 in the last diagonal entry.
/// Dense eigensolve; n above 512 is rejected as out of budget.
double toeplitz_min_eigen(const WeightTable& weights, int n, double shift_last);

/// Szego constant exp((1/2pi) Int_0^{2pi} ln f(x) dx) by composite Gauss
/// quadrature with geometric panel refinement into the symbol zeros.
/// Throws if the symbol evaluates negative beyond -1e-12 anywhere sampled.
double szego_epsilon0(const ThetaScheme& scheme, double quad_tol);

}  // namespace fraccable
