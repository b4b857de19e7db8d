#include "fraccable/weights.hpp"

#include "fraccable/linalg.hpp"
#include "fraccable/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraccable {

std::string family_name(Family f)
{
    return f == Family::FBT ? "fbt" : "fbn";
}

Family family_from_name(const std::string& name)
{
    if (name == "fbt" || name == "FBT") return Family::FBT;
    if (name == "fbn" || name == "FBN") return Family::FBN;
    throw std::invalid_argument("unknown family '" + name + "' (expected fbt or fbn)");
}

void ThetaScheme::validate() const
{
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("ThetaScheme: alpha must lie in (0, 1]");
    if (family == Family::FBT) {
        if (!(theta < 0.5))
            throw std::invalid_argument("ThetaScheme: FBT requires theta < 1/2");
    } else {
        const double lo = -1.0 / (2.0 * alpha);
        if (!(theta >= lo) || !(theta <= 1.0))
            throw std::invalid_argument("ThetaScheme: FBN requires -1/(2 alpha) <= theta <= 1");
    }
}

double ThetaScheme::omega0() const
{
    if (family == Family::FBT)
        return std::pow((3.0 - 2.0 * theta) / (2.0 - 2.0 * theta), alpha);
    return std::pow(2.0, -alpha) * (1.0 + alpha * theta) * std::pow(3.0 - 2.0 * theta, alpha);
}

std::array<double, 3> ThetaScheme::phi() const
{
    const double a = alpha, t = theta;
    if (family == Family::FBT) {
        return {-(a / 2.0) * (2.0 * t * t - 5.0 * t + 4.0),
                -a * (2.0 * t - 1.0) * (1.0 - t),
                -(a * t / 2.0) * (2.0 * t - 1.0)};
    }
    return {2.0 * a * (t - 1.0) * (a * t + 1.0) + a * t * (t - 1.5),
            -a * (2.0 * t * t - 3.0 * a * t + 4.0 * a * t * t - 1.0),
            -a * t * (0.5 - t + a - 2.0 * a * t)};
}

std::array<double, 4> ThetaScheme::psi() const
{
    const double a = alpha, t = theta;
    if (family == Family::FBT) {
        return {0.5 * (3.0 - 2.0 * t) * (1.0 - t),
                0.5 * (1.0 - 2.0 * t) * (3.0 * t - 4.0),
                0.5 * (1.0 - t) * (1.0 - 6.0 * t),
                0.5 * t * (1.0 - 2.0 * t)};
    }
    return {0.5 * (3.0 - 2.0 * t) * (1.0 + a * t),
            -(a * t / 2.0) * (3.0 - 2.0 * t) - 2.0 * (1.0 - t) * (a * t + 1.0),
            -0.5 * (a * t + 1.0) * (2.0 * t - 1.0) - 2.0 * a * t * (t - 1.0),
            -0.5 * a * t * (1.0 - 2.0 * t)};
}

namespace {

WeightTable recursion_weights(const ThetaScheme& scheme, int n_max)
{
    scheme.validate();
    if (n_max < 0) throw std::invalid_argument("weights: n_max must be >= 0");

    const auto phi = scheme.phi();
    const auto psi = scheme.psi();

    WeightTable table{scheme, {}};
    table.omega.resize(n_max + 1);
    table.omega[0] = scheme.omega0();
    for (int k = 1; k <= n_max; ++k) {
        double s = 0.0;
        for (int j = 1; j <= 3; ++j) {
            if (k - j < 0) break;
            s += (phi[j - 1] - (k - j) * psi[j]) * table.omega[k - j];
        }
        table.omega[k] = s / (k * psi[0]);
    }
    return table;
}

// Coefficients of (1 - lambda xi)^beta up to degree n via the binomial
// recurrence c_k = c_{k-1} * lambda * (k - 1 - beta) / k.
std::vector<double> binomial_series(double beta, double lambda, int n)
{
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        c[k] = c[k - 1] * lambda * (k - 1.0 - beta) / k;
    return c;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b, int n)
{
    std::vector<double> c(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += ai * b[j];
    }
    return c;
}

}  // namespace

WeightTable fbt_weights(double alpha, double theta, int n_max)
{
    return recursion_weights({Family::FBT, alpha, theta}, n_max);
}

WeightTable fbn_weights(double alpha, double theta, int n_max)
{
    return recursion_weights({Family::FBN, alpha, theta}, n_max);
}

WeightTable make_weights(const ThetaScheme& scheme, int n_max)
{
    return recursion_weights(scheme, n_max);
}

WeightTable gf_expand_oracle(const ThetaScheme& scheme, int n_max)
{
    scheme.validate();
    if (n_max < 0) throw std::invalid_argument("gf_expand_oracle: n_max must be >= 0");

    const double a = scheme.alpha, t = scheme.theta;
    std::vector<double> coeffs;
    double scale;
    if (scheme.family == Family::FBT) {
        const double lam1 = t / (t - 1.0);
        const double lam2 = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
        scale = std::pow((3.0 - 2.0 * t) / (2.0 - 2.0 * t), a);
        coeffs = binomial_series(a, 1.0, n_max);                       // (1 - xi)^a
        coeffs = convolve(coeffs, binomial_series(-a, lam1, n_max), n_max);
        coeffs = convolve(coeffs, binomial_series(a, lam2, n_max), n_max);
    } else {
        const double lam1 = a * t / (1.0 + a * t);
        const double lam2 = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
        scale = std::pow(1.5 - t, a) * (1.0 + a * t);
        coeffs = binomial_series(a, 1.0, n_max);
        coeffs = convolve(coeffs, binomial_series(1.0, lam1, n_max), n_max);
        coeffs = convolve(coeffs, binomial_series(a, lam2, n_max), n_max);
    }

    WeightTable table{scheme, std::move(coeffs)};
    for (double& w : table.omega) w *= scale;
    return table;
}

double rl_derivative_of_power(double sigma, double alpha, double t)
{
    return gamma_fn(sigma + 1.0) / gamma_fn(sigma + 1.0 - alpha) * std::pow(t, sigma - alpha);
}

namespace {

void check_sigma(std::span<const double> sigma)
{
    const int s = static_cast<int>(sigma.size());
    if (s < 1 || s > 4)
        throw std::invalid_argument("starting_weights: need 1..4 exponents");
    for (int i = 0; i < s; ++i) {
        if (!(sigma[i] > 0.0))
            throw std::invalid_argument("starting_weights: exponents must be positive");
        if (i > 0 && !(sigma[i] > sigma[i - 1]))
            throw std::invalid_argument("starting_weights: exponents must be strictly increasing");
    }
}

// RHS of the exactness system at level n for exponent sigma:
//   Gamma(sigma+1)/Gamma(sigma+1-alpha) n^{sigma-alpha} - sum_{k<=n} omega_{n-k} k^sigma.
// The tau powers of the defining identity cancel in this scaled form.
double correction_rhs(const WeightTable& w, double sigma, int n)
{
    const double alpha = w.scheme.alpha;
    double conv = 0.0;
    for (int k = 1; k <= n; ++k)
        conv += w.omega[n - k] * std::pow(static_cast<double>(k), sigma);
    return rl_derivative_of_power(sigma, alpha, static_cast<double>(n)) - conv;
}

DenseLU factor_vandermonde(std::span<const double> sigma)
{
    const int s = static_cast<int>(sigma.size());
    std::vector<double> a(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            a[static_cast<std::size_t>(i) * s + j] = std::pow(static_cast<double>(j + 1), sigma[i]);
    return DenseLU(std::move(a), s);
}

}  // namespace

StartingRow starting_weights(const WeightTable& weights, std::span<const double> sigma, int n)
{
    check_sigma(sigma);
    if (n < 1) throw std::invalid_argument("starting_weights: n must be >= 1");
    if (weights.n_max() < n)
        throw std::invalid_argument("starting_weights: weight table too short");

    const int s = static_cast<int>(sigma.size());
    const DenseLU lu = factor_vandermonde(sigma);

    StartingRow row;
    row.cond_estimate = lu.condition_estimate();
    row.ill_conditioned = row.cond_estimate > 1e12;
    row.w.resize(s);
    for (int i = 0; i < s; ++i) row.w[i] = correction_rhs(weights, sigma[i], n);
    lu.solve_inplace(row.w);
    return row;
}

const std::vector<double>& StartingWeights::at(int n) const
{
    if (n < 1 || n >= static_cast<int>(per_level.size()))
        throw std::out_of_range("StartingWeights: level out of range");
    return per_level[n];
}

StartingWeights compute_starting_weights(const WeightTable& weights,
                                         std::span<const double> sigma, int n_max)
{
    check_sigma(sigma);
    if (n_max < 1) throw std::invalid_argument("compute_starting_weights: n_max must be >= 1");
    if (weights.n_max() < n_max)
        throw std::invalid_argument("compute_starting_weights: weight table too short");

    const int s = static_cast<int>(sigma.size());
    const DenseLU lu = factor_vandermonde(sigma);
    const double cond = lu.condition_estimate();

    StartingWeights out;
    out.sigma.assign(sigma.begin(), sigma.end());
    out.any_ill_conditioned = cond > 1e12;
    out.per_level.resize(n_max + 1);

    // k^sigma_i tables keep the per-level convolution sums O(n).
    std::vector<std::vector<double>> kpow(s, std::vector<double>(n_max + 1, 0.0));
    for (int i = 0; i < s; ++i)
        for (int k = 1; k <= n_max; ++k)
            kpow[i][k] = std::pow(static_cast<double>(k), sigma[i]);

    std::vector<double> rhs(s);
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 0; i < s; ++i) {
            double conv = 0.0;
            for (int k = 1; k <= n; ++k) conv += weights.omega[n - k] * kpow[i][k];
            rhs[i] = rl_derivative_of_power(sigma[i], weights.scheme.alpha,
                                            static_cast<double>(n)) - conv;
        }
        out.per_level[n] = lu.solve(rhs);
    }
    return out;
}

double apply_discrete_operator(const WeightTable& weights,
                               const StartingWeights* starting,
                               std::span<const double> samples, double tau)
{
    if (samples.empty())
        throw std::invalid_argument("apply_discrete_operator: empty samples");
    if (!(tau > 0.0))
        throw std::invalid_argument("apply_discrete_operator: tau must be positive");
    const int n = static_cast<int>(samples.size()) - 1;
    if (weights.n_max() < n)
        throw std::invalid_argument("apply_discrete_operator: weight table too short");

    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += weights.omega[n - k] * samples[k];

    if (starting && n >= 1) {
        const auto& sw = starting->at(n);
        for (int j = 1; j <= starting->s(); ++j) {
            if (j > n)
                throw std::invalid_argument(
                    "apply_discrete_operator: correction references levels beyond the samples");
            sum += sw[j - 1] * samples[j];
        }
    }
    return std::pow(tau, -weights.scheme.alpha) * sum;
}

}  // namespace fraccable
