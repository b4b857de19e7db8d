#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace fraccable {

enum class Family { FBT, FBN };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One fractional theta-method: the family tag, the fractional order alpha
/// in (0, 1], and the method parameter theta. Admissible theta ranges are
/// (-inf, 1/2) for FBT and [-1/(2 alpha), 1] for FBN, endpoints exact.
struct ThetaScheme {
    Family family = Family::FBT;
    double alpha = 1.0;
    double theta = 0.0;

    void validate() const;

    /// Leading convolution weight of the generating function.
    double omega0() const;

    /// Numerator polynomial coefficients of the weight recursion.
    std::array<double, 3> phi() const;

    /// Denominator polynomial coefficients of the weight recursion.
    std::array<double, 4> psi() const;
};

/// Convolution weights omega_0..omega_{n_max} of one scheme.
struct WeightTable {
    ThetaScheme scheme;
    std::vector<double> omega;

    int n_max() const { return static_cast<int>(omega.size()) - 1; }
};

/// FBT-theta convolution weights by the O(n) three-term recursion.
WeightTable fbt_weights(double alpha, double theta, int n_max);

/// FBN-theta convolution weights by the O(n) three-term recursion.
WeightTable fbn_weights(double alpha, double theta, int n_max);

WeightTable make_weights(const ThetaScheme& scheme, int n_max);

/// Independent oracle: expands the factored generating function by
/// generalized binomial series and discrete convolution. O(n_max^2).
WeightTable gf_expand_oracle(const ThetaScheme& scheme, int n_max);

/// Riemann-Liouville derivative of t^sigma, order alpha in (0, 1]:
/// Gamma(sigma+1)/Gamma(sigma+1-alpha) * t^(sigma-alpha).
double rl_derivative_of_power(double sigma, double alpha, double t);

/// Starting (correction) weights for one time level.
struct StartingRow {
    std::vector<double> w;          // omega_{n,1} .. omega_{n,s}
    double cond_estimate = 0.0;
    bool ill_conditioned = false;   // condition estimate above 1e12
};

/// Solve the s x s system making the discrete operator exact on t^{sigma_i}
/// at level n. `sigma` must be strictly increasing and positive, s <= 4.
StartingRow starting_weights(const WeightTable& weights,
                             std::span<const double> sigma, int n);

/// Correction weights for all levels 1..n_max of one scheme.
struct StartingWeights {
    std::vector<double> sigma;
    std::vector<std::vector<double>> per_level;  // per_level[n], n >= 1
    bool any_ill_conditioned = false;

    int s() const { return static_cast<int>(sigma.size()); }
    const std::vector<double>& at(int n) const;
};

StartingWeights compute_starting_weights(const WeightTable& weights,
                                         std::span<const double> sigma, int n_max);

/// tau^{-alpha} [ sum_{k<=n} omega_{n-k} phi^k + sum_{j<=s} omega_{n,j} phi^j ]
/// for samples phi^0..phi^n. `starting` may be null (no correction part).
double apply_discrete_operator(const WeightTable& weights,
                               const StartingWeights* starting,
                               std::span<const double> samples, double tau);

}  // namespace fraccable
