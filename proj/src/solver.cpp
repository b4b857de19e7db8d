#include "fraccable/solver.hpp"

#include "fraccable/specfun.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraccable {

void CableProblem::validate() const
{
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw std::invalid_argument("CableProblem: gamma must lie in (0, 1)");
    if (!(kappa > 0.0) || !(kappa < 1.0))
        throw std::invalid_argument("CableProblem: kappa must lie in (0, 1)");
    if (!(mu >= 0.0)) throw std::invalid_argument("CableProblem: mu must be >= 0");
    if (dim != 1 && dim != 2) throw std::invalid_argument("CableProblem: dim must be 1 or 2");
    if (!(length > 0.0) || !(T > 0.0))
        throw std::invalid_argument("CableProblem: length and T must be positive");
    if (!u0) throw std::invalid_argument("CableProblem: u0 is required");
}

ThetaScheme SchemeConfig::scheme_time() const
{
    // alpha = 1 uses the theta = 0 weights: plain BDF2 for u_t.
    return {family, 1.0, 0.0};
}

ThetaScheme SchemeConfig::scheme_gamma(double gamma) const
{
    return {family, 1.0 - gamma, theta_gamma};
}

ThetaScheme SchemeConfig::scheme_kappa(double kappa) const
{
    return {family, 1.0 - kappa, theta_kappa};
}

void SchemeConfig::validate(const CableProblem& problem) const
{
    problem.validate();
    scheme_time().validate();
    scheme_gamma(problem.gamma).validate();
    scheme_kappa(problem.kappa).validate();
    if (!(tau > 0.0) || n_steps < 1)
        throw std::invalid_argument("SchemeConfig: need tau > 0 and n_steps >= 1");
    if (std::abs(tau * n_steps - problem.T) > 1e-10 * problem.T)
        throw std::invalid_argument("SchemeConfig: tau * n_steps must equal T");
    const int ns = s();
    if (ns > 4) throw std::invalid_argument("SchemeConfig: at most 4 correction exponents");
    for (int i = 0; i < ns; ++i) {
        if (!(correction_sigma[i] > 0.0))
            throw std::invalid_argument("SchemeConfig: correction exponents must be positive");
        if (i > 0 && !(correction_sigma[i] > correction_sigma[i - 1]))
            throw std::invalid_argument("SchemeConfig: correction exponents must increase");
    }
    if (ns > n_steps)
        throw std::invalid_argument("SchemeConfig: more correction exponents than time levels");
}

std::vector<double> SolveResult::u_coeffs(int level) const
{
    const auto& v = v_levels.at(level);
    std::vector<double> u(u0h);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
    return u;
}

double transform_rhs(const CableProblem& problem, Point z, double t)
{
    if (!(t > 0.0)) throw std::domain_error("transform_rhs: t must be positive");
    double value = problem.f ? problem.f(z, t) : 0.0;
    value += problem.laplacian_u0(z) * std::pow(t, problem.gamma - 1.0) / gamma_fn(problem.gamma);
    value -= problem.mu * problem.mu * problem.u0(z) *
             std::pow(t, problem.kappa - 1.0) / gamma_fn(problem.kappa);
    return value;
}

CableSolver::CableSolver(const CableProblem& problem, const FemSpace& space,
                         const SchemeConfig& config)
    : problem_(problem), space_(space), config_(config),
      w_time_{}, w_gamma_{}, w_kappa_{}
{
    config_.validate(problem_);
    if (space_.mesh().dim != problem_.dim)
        throw std::invalid_argument("CableSolver: mesh/problem dimension mismatch");

    const int N = config_.n_steps;
    w_time_ = make_weights(config_.scheme_time(), N);
    w_gamma_ = make_weights(config_.scheme_gamma(problem_.gamma), N);
    w_kappa_ = make_weights(config_.scheme_kappa(problem_.kappa), N);

    if (config_.s() > 0) {
        st_time_ = compute_starting_weights(w_time_, config_.correction_sigma, N);
        st_gamma_ = compute_starting_weights(w_gamma_, config_.correction_sigma, N);
        st_kappa_ = compute_starting_weights(w_kappa_, config_.correction_sigma, N);
    }

    coeff_time_ = 1.0 / config_.tau;
    coeff_gamma_ = std::pow(config_.tau, problem_.gamma - 1.0);
    coeff_kappa_ = problem_.mu * problem_.mu * std::pow(config_.tau, problem_.kappa - 1.0);
}

BandedSymMatrix CableSolver::step_matrix() const
{
    const double cm = coeff_time_ * w_time_.omega[0] + coeff_kappa_ * w_kappa_.omega[0];
    const double ca = coeff_gamma_ * w_gamma_.omega[0];
    return linear_combination(cm, space_.mass(), ca, space_.stiffness());
}

std::vector<double> CableSolver::history_rhs(int level, std::span<const double> f_load,
                                             std::span<const std::vector<double>> v_history) const
{
    const int dofs = space_.dof_count();
    if (static_cast<int>(f_load.size()) != dofs)
        throw std::invalid_argument("history_rhs: load size mismatch");
    if (static_cast<int>(v_history.size()) < level - 1)
        throw std::runtime_error("history_rhs: missing history level");

    std::vector<double> rhs(f_load.begin(), f_load.end());
    const int s = config_.s();
    for (int k = 1; k < level; ++k) {
        const int d = level - k;
        double cm = coeff_time_ * w_time_.omega[d] + coeff_kappa_ * w_kappa_.omega[d];
        double ca = coeff_gamma_ * w_gamma_.omega[d];
        if (k <= s && level > s) {
            cm += coeff_time_ * st_time_->at(level)[k - 1] +
                  coeff_kappa_ * st_kappa_->at(level)[k - 1];
            ca += coeff_gamma_ * st_gamma_->at(level)[k - 1];
        }
        space_.mass().multiply_add(v_history[k - 1], -cm, rhs);
        space_.stiffness().multiply_add(v_history[k - 1], -ca, rhs);
    }
    return rhs;
}

SpatialFn CableSolver::effective_laplacian(bool& approximate) const
{
    if (problem_.laplacian_u0) {
        approximate = false;
        return problem_.laplacian_u0;
    }
    // Central-difference fallback, flagged approximate in the result.
    approximate = true;
    const double d = space_.mesh().cell_size() / 16.0;
    const SpatialFn u0 = problem_.u0;
    const int dim = problem_.dim;
    return [u0, d, dim](Point p) {
        double lap = (u0({p.x + d, p.y}) - 2.0 * u0(p) + u0({p.x - d, p.y})) / (d * d);
        if (dim == 2)
            lap += (u0({p.x, p.y + d}) - 2.0 * u0(p) + u0({p.x, p.y - d})) / (d * d);
        return lap;
    };
}

std::vector<double> CableSolver::load_at(double t, const SpatialFn& lap_u0) const
{
    const CableProblem& p = problem_;
    const double mu2 = p.mu * p.mu;
    const double cg = std::pow(t, p.gamma - 1.0) / gamma_fn(p.gamma);
    const double ck = std::pow(t, p.kappa - 1.0) / gamma_fn(p.kappa);
    const int quad = p.dim == 1 ? 5 : 4;
    SpatialFn F = [&](Point z) {
        double v = p.f ? p.f(z, t) : 0.0;
        return v + lap_u0(z) * cg - mu2 * p.u0(z) * ck;
    };
    return load_vector(space_, F, quad);
}

void CableSolver::solve_starting_block(std::span<const std::vector<double>> loads,
                                       std::vector<std::vector<double>>& v_levels) const
{
    // Levels 1..s are coupled through the starting weights (the correction
    // at level n references V^1..V^s), so they are solved as one block
    // system of size s * dofs, interleaved node-major to stay banded.
    const int s = config_.s();
    const int dofs = space_.dof_count();
    const int bw = space_.mass().bandwidth();
    const int band = s * bw + (s - 1);
    BandedMatrix block(s * dofs, band, band);
    std::vector<double> rhs(static_cast<std::size_t>(s) * dofs);

    auto index = [s](int node, int level1) { return node * s + (level1 - 1); };

    for (int n = 1; n <= s; ++n)
        for (int m = 1; m <= s; ++m) {
            double cm = coeff_time_ * st_time_->at(n)[m - 1] +
                        coeff_kappa_ * st_kappa_->at(n)[m - 1];
            double ca = coeff_gamma_ * st_gamma_->at(n)[m - 1];
            if (m <= n) {
                const int d = n - m;
                cm += coeff_time_ * w_time_.omega[d] + coeff_kappa_ * w_kappa_.omega[d];
                ca += coeff_gamma_ * w_gamma_.omega[d];
            }
            if (cm == 0.0 && ca == 0.0) continue;
            for (int i = 0; i < dofs; ++i)
                for (int j = std::max(0, i - bw); j <= std::min(dofs - 1, i + bw); ++j) {
                    const double v = cm * space_.mass().at(i, j) + ca * space_.stiffness().at(i, j);
                    if (v != 0.0) block.add(index(i, n), index(j, m), v);
                }
        }

    for (int n = 1; n <= s; ++n)
        for (int i = 0; i < dofs; ++i) rhs[index(i, n)] = loads[n - 1][i];

    BandedLU lu(block);
    lu.solve_inplace(rhs);

    for (int n = 1; n <= s; ++n) {
        v_levels[n].resize(dofs);
        for (int i = 0; i < dofs; ++i) v_levels[n][i] = rhs[index(i, n)];
    }
}

SolveResult CableSolver::run()
{
    const auto t_start = std::chrono::steady_clock::now();
    const int N = config_.n_steps;
    const int dofs = space_.dof_count();
    const int s = config_.s();
    const double tau = config_.tau;

    SolveResult result;
    result.tau = tau;
    result.max_error = std::numeric_limits<double>::quiet_NaN();

    SpatialFn lap_u0 = effective_laplacian(result.approximate_laplacian);

    SpatialGradFn grad_u0;
    {
        // Ritz projection of u0 needs its gradient; a tight central
        // difference keeps the interface at (u0, lap u0) as stated.
        const double d = 1e-6 * space_.mesh().length;
        const SpatialFn u0 = problem_.u0;
        const int dim = problem_.dim;
        grad_u0 = [u0, d, dim](Point p) {
            Point g;
            g.x = (u0({p.x + d, p.y}) - u0({p.x - d, p.y})) / (2.0 * d);
            if (dim == 2) g.y = (u0({p.x, p.y + d}) - u0({p.x, p.y - d})) / (2.0 * d);
            return g;
        };
    }
    result.u0h = ritz_project(space_, problem_.u0, grad_u0);

    result.v_levels.assign(N + 1, {});
    result.v_levels[0].assign(dofs, 0.0);

    const bool have_exact = static_cast<bool>(problem_.exact);
    if (have_exact) result.per_level_error.resize(N + 1);
    result.per_level_norm.resize(N + 1);

    const int quad = problem_.dim == 1 ? 5 : 4;
    auto record_level = [&](int n) {
        const std::vector<double> u = result.u_coeffs(n);
        const double t = n * tau;
        result.per_level_norm[n] = l2_norm_error(space_, u, [](Point) { return 0.0; }, quad);
        if (have_exact) {
            result.per_level_error[n] =
                l2_norm_error(space_, u, [&](Point z) { return problem_.exact(z, t); }, quad);
        }
    };
    record_level(0);

    // Cached M V^k and A V^k per level; the three operator terms collapse
    // to two AXPYs per history level. Falls back to recomputation when the
    // cache would get too large.
    const bool cache_matvecs =
        config_.cache_matvecs && static_cast<long long>(N + 1) * dofs <= 8'000'000;
    std::vector<std::vector<double>> mv(N + 1), av(N + 1);
    auto push_level = [&](int n) {
        if (cache_matvecs) {
            mv[n] = space_.mass().multiply(result.v_levels[n]);
            av[n] = space_.stiffness().multiply(result.v_levels[n]);
        }
        record_level(n);
    };

    if (s > 0) {
        std::vector<std::vector<double>> loads(s);
        for (int n = 1; n <= s; ++n) loads[n - 1] = load_at(n * tau, lap_u0);
        solve_starting_block(loads, result.v_levels);
        ++result.factorizations;
        ++result.linear_solves;
        for (int n = 1; n <= s; ++n) push_level(n);
    }

    std::optional<BandedCholesky> chol;
    if (config_.reuse_factorization && N > s) {
        chol.emplace(step_matrix());
        ++result.factorizations;
    }

    for (int n = s + 1; n <= N; ++n) {
        std::vector<double> rhs = load_at(n * tau, lap_u0);
        if (cache_matvecs) {
            for (int k = 1; k < n; ++k) {
                const int d = n - k;
                double cm = coeff_time_ * w_time_.omega[d] + coeff_kappa_ * w_kappa_.omega[d];
                double ca = coeff_gamma_ * w_gamma_.omega[d];
                if (k <= s) {
                    cm += coeff_time_ * st_time_->at(n)[k - 1] +
                          coeff_kappa_ * st_kappa_->at(n)[k - 1];
                    ca += coeff_gamma_ * st_gamma_->at(n)[k - 1];
                }
                const auto& mvk = mv[k];
                const auto& avk = av[k];
                for (int i = 0; i < dofs; ++i) rhs[i] -= cm * mvk[i] + ca * avk[i];
            }
        } else {
            rhs = history_rhs(n, rhs, std::span(result.v_levels).subspan(1, n - 1));
        }

        if (config_.reuse_factorization) {
            result.v_levels[n] = chol->solve(rhs);
        } else {
            BandedCholesky fresh(step_matrix());
            ++result.factorizations;
            result.v_levels[n] = fresh.solve(rhs);
        }
        ++result.linear_solves;
        push_level(n);
    }

    if (have_exact) {
        result.argmax_level = 0;
        for (int n = 1; n <= N; ++n)
            if (result.per_level_error[n] > result.per_level_error[result.argmax_level])
                result.argmax_level = n;
        result.max_error = result.per_level_error[result.argmax_level];
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

}  // namespace fraccable
