#pragma once

#include "fraccable/fem.hpp"
#include "fraccable/weights.hpp"

#include <optional>
#include <vector>

namespace fraccable {

/// The time-fractional Cable problem
///   u_t = D^{1-gamma} Lap u - mu^2 D^{1-kappa} u + f
/// on (0,L)^dim x (0,T] with homogeneous Dirichlet data and u(0) = u0.
struct CableProblem {
    double gamma = 0.5;
    double kappa = 0.5;
    double mu = 1.0;
    int dim = 1;
    double length = 1.0;
    double T = 1.0;
    SpaceTimeFn f;
    SpatialFn u0;
    SpatialFn laplacian_u0;   // analytic; leave empty for the flagged FD fallback
    SpaceTimeFn exact;        // optional

    void validate() const;
};

/// Time discretization: one theta per fractional operator, an optional
/// correction exponent set, and the step/level count with tau * n_steps = T.
struct SchemeConfig {
    Family family = Family::FBT;
    double theta_gamma = 0.0;
    double theta_kappa = 0.0;
    std::vector<double> correction_sigma;  // empty => no starting part
    double tau = 0.1;
    int n_steps = 10;

    // Test hooks; production runs keep both on.
    bool reuse_factorization = true;
    bool cache_matvecs = true;

    ThetaScheme scheme_time() const;   // first derivative: BDF2, theta = 0
    ThetaScheme scheme_gamma(double gamma) const;
    ThetaScheme scheme_kappa(double kappa) const;
    int s() const { return static_cast<int>(correction_sigma.size()); }

    void validate(const CableProblem& problem) const;
};

struct SolveResult {
    std::vector<std::vector<double>> v_levels;  // V^0..V^N (V^0 = 0)
    std::vector<double> u0h;                    // Ritz projection of u0
    std::vector<double> per_level_error;        // ||u^n - U^n||, empty without exact
    std::vector<double> per_level_norm;         // ||U^n||
    double max_error = 0.0;                     // E(tau, h), NaN without exact
    int argmax_level = 0;
    double tau = 0.0;

    double wall_seconds = 0.0;
    int factorizations = 0;
    long long linear_solves = 0;
    bool approximate_laplacian = false;

    std::vector<double> u_coeffs(int level) const;
};

/// F(z, t) = f(z, t) + Lap u0(z) t^{gamma-1}/Gamma(gamma)
///                   - mu^2 u0(z) t^{kappa-1}/Gamma(kappa); requires t > 0.
double transform_rhs(const CableProblem& problem, Point z, double t);

/// One configured run of the fully discrete scheme over a FEM space.
class CableSolver {
public:
    CableSolver(const CableProblem& problem, const FemSpace& space, const SchemeConfig& config);

    /// Constant per-step system matrix
    ///   (omega0^(1)/tau) M + tau^{gamma-1} omega0^(1-gamma) A
    ///   + mu^2 tau^{kappa-1} omega0^(1-kappa) M.
    BandedSymMatrix step_matrix() const;

    /// Right-hand side at `level` given the load vector of F^level and the
    /// previous solution levels V^1..V^{level-1}. Reference (uncached) path.
    std::vector<double> history_rhs(int level, std::span<const double> f_load,
                                    std::span<const std::vector<double>> v_history) const;

    SolveResult run();

    const WeightTable& weights_time() const { return w_time_; }
    const WeightTable& weights_gamma() const { return w_gamma_; }
    const WeightTable& weights_kappa() const { return w_kappa_; }

private:
    const CableProblem& problem_;
    const FemSpace& space_;
    SchemeConfig config_;

    WeightTable w_time_, w_gamma_, w_kappa_;
    std::optional<StartingWeights> st_time_, st_gamma_, st_kappa_;

    double coeff_time_;    // 1/tau
    double coeff_gamma_;   // tau^{gamma-1}
    double coeff_kappa_;   // mu^2 tau^{kappa-1}

    SpatialFn effective_laplacian(bool& approximate) const;
    std::vector<double> load_at(double t, const SpatialFn& lap_u0) const;
    void solve_starting_block(std::span<const std::vector<double>> loads,
                              std::vector<std::vector<double>>& v_levels) const;
};

}  // namespace fraccable
