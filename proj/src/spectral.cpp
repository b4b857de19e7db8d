#include "fraccable/spectral.hpp"

#include "fraccable/linalg.hpp"
#include "fraccable/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fraccable {

namespace {

constexpr double kPi = std::numbers::pi;

// Argument of 1 - lambda e^{ix} on the branch that is 0 at x = 0. The
// |lambda| = 1 case (FBN at theta = -1/(2 alpha) or theta = 1) degenerates
// to atan2(0, 0) at x = pi and is patched with the analytic limit.
double factor_phase(double lambda, double x)
{
    const double re = 1.0 - lambda * std::cos(x);
    const double im = -lambda * std::sin(x);
    if (re * re + im * im < 1e-28) return x <= kPi ? x / 2.0 : x / 2.0 - kPi;
    return std::atan2(im, re);
}

double factor_mod_sq(double lambda, double x)
{
    return 1.0 + lambda * lambda - 2.0 * lambda * std::cos(x);
}

struct FactoredSymbol {
    double lam1, lam2;
    double log_scale;   // ln of the constant prefactor
    double alpha;
    Family family;
};

FactoredSymbol factored(const ThetaScheme& scheme)
{
    const double a = scheme.alpha, t = scheme.theta;
    FactoredSymbol fs;
    fs.alpha = a;
    fs.family = scheme.family;
    fs.lam2 = (1.0 - 2.0 * t) / (3.0 - 2.0 * t);
    if (scheme.family == Family::FBT) {
        fs.lam1 = t / (t - 1.0);
        fs.log_scale = a * std::log((3.0 - 2.0 * t) / (2.0 - 2.0 * t));
    } else {
        fs.lam1 = a * t / (1.0 + a * t);
        fs.log_scale = a * std::log(1.5 - t) + std::log(1.0 + a * t);
    }
    return fs;
}

double phase_cosine(const FactoredSymbol& fs, double x)
{
    const double phi1 = factor_phase(fs.lam1, x);
    const double phi2 = factor_phase(fs.lam2, x);
    if (fs.family == Family::FBT)
        return std::cos(fs.alpha * (x / 2.0 - kPi / 2.0 + phi2 - phi1));
    return std::cos(fs.alpha * (x - kPi) / 2.0 + phi1 + fs.alpha * phi2);
}

// ln f(x) assembled factor by factor; only the phase cosine can round
// below zero near its zeros, so it is the one guarded.
double log_symbol(const FactoredSymbol& fs, double x)
{
    double g = phase_cosine(fs, x);
    if (g < -1e-12)
        throw std::runtime_error("szego_epsilon0: symbol is negative, positivity violated");
    g = std::abs(g);
    if (g == 0.0) g = std::numeric_limits<double>::min();

    double lf = fs.log_scale + fs.alpha * std::log(2.0 * std::sin(x / 2.0)) + std::log(g);
    if (fs.family == Family::FBT) {
        lf += 0.5 * fs.alpha *
              (std::log(factor_mod_sq(fs.lam2, x)) - std::log(factor_mod_sq(fs.lam1, x)));
    } else {
        lf += 0.5 * std::log(factor_mod_sq(fs.lam1, x)) +
              0.5 * fs.alpha * std::log(factor_mod_sq(fs.lam2, x));
    }
    return lf;
}

}  // namespace

double symbol_series(const ThetaScheme& scheme, double x, int k_max)
{
    scheme.validate();
    if (k_max < 1) throw std::invalid_argument("symbol_series: k_max must be >= 1");
    const WeightTable w = make_weights(scheme, k_max);
    double sum = w.omega[0];
    for (int k = 1; k <= k_max; ++k) sum += w.omega[k] * std::cos(k * x);
    return sum;
}

SymbolEvaluation symbol_closed_form(const ThetaScheme& scheme, double x)
{
    scheme.validate();
    if (x < 0.0 || x > 2.0 * kPi)
        throw std::invalid_argument("symbol_closed_form: x must lie in [0, 2 pi]");

    const FactoredSymbol fs = factored(scheme);
    SymbolEvaluation ev;
    ev.x = x;
    ev.g = phase_cosine(fs, x);
    if (scheme.family == Family::FBT) {
        const double phi1 = factor_phase(fs.lam1, x);
        const double phi2 = factor_phase(fs.lam2, x);
        ev.h = x / 2.0 - kPi / 2.0 + phi2 - phi1;
    } else {
        ev.h = std::numeric_limits<double>::quiet_NaN();
    }

    if (x == 0.0 || x == 2.0 * kPi || std::sin(x / 2.0) <= 0.0) {
        ev.f = 0.0;  // endpoint zero of (2 sin(x/2))^alpha
        return ev;
    }

    double mag = std::exp(fs.log_scale) * std::pow(2.0 * std::sin(x / 2.0), fs.alpha);
    if (scheme.family == Family::FBT) {
        mag *= std::pow(factor_mod_sq(fs.lam2, x) / factor_mod_sq(fs.lam1, x), fs.alpha / 2.0);
    } else {
        mag *= std::sqrt(factor_mod_sq(fs.lam1, x)) *
               std::pow(factor_mod_sq(fs.lam2, x), fs.alpha / 2.0);
    }
    ev.f = mag * ev.g;
    return ev;
}

HThetaRange h_theta_range_check(double theta, int n_samples)
{
    if (!(theta < 0.5))
        throw std::invalid_argument("h_theta_range_check: FBT requires theta < 1/2");
    if (n_samples < 2)
        throw std::invalid_argument("h_theta_range_check: need at least 2 samples");

    const FactoredSymbol fs = factored({Family::FBT, 1.0, theta});
    HThetaRange out;
    out.min_h = std::numeric_limits<double>::infinity();
    out.max_h = -std::numeric_limits<double>::infinity();
    out.monotone = true;
    double prev = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double x = kPi * i / (n_samples - 1);
        const double h = x / 2.0 - kPi / 2.0 + factor_phase(fs.lam2, x) - factor_phase(fs.lam1, x);
        out.min_h = std::min(out.min_h, h);
        out.max_h = std::max(out.max_h, h);
        if (i > 0 && h < prev - 1e-12) out.monotone = false;
        prev = h;
    }
    return out;
}

double h_of(double alpha, double theta, Family family, int x_grid, bool refine)
{
    ThetaScheme scheme{family, alpha, theta};
    scheme.validate();
    if (x_grid < 3) throw std::invalid_argument("h_of: grid too small");

    const FactoredSymbol fs = factored(scheme);
    auto g = [&](double x) { return phase_cosine(fs, x); };

    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < x_grid; ++i) {
        const double x = kPi * i / (x_grid - 1);
        const double v = g(x);
        if (v < best) { best = v; best_i = i; }
    }
    if (!refine) return best;

    double lo = kPi * std::max(0, best_i - 1) / (x_grid - 1);
    double hi = kPi * std::min(x_grid - 1, best_i + 1) / (x_grid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        }
    }
    return std::min({best, f1, f2});
}

double toeplitz_min_eigen(const WeightTable& weights, int n, double shift_last)
{
    if (n < 1) throw std::invalid_argument("toeplitz_min_eigen: n must be >= 1");
    if (n > 512) throw std::runtime_error("toeplitz_min_eigen: n exceeds the dense budget (512)");
    if (weights.n_max() < n - 1)
        throw std::invalid_argument("toeplitz_min_eigen: weight table too short");

    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int d = std::abs(i - j);
            a[static_cast<std::size_t>(i) * n + j] =
                d == 0 ? weights.omega[0] : 0.5 * weights.omega[d];
        }
    a[static_cast<std::size_t>(n - 1) * n + (n - 1)] -= shift_last;
    return sym_eigenvalues(std::move(a), n).front();
}

double szego_epsilon0(const ThetaScheme& scheme, double quad_tol)
{
    scheme.validate();
    if (!(quad_tol > 0.0)) throw std::invalid_argument("szego_epsilon0: quad_tol must be positive");

    const FactoredSymbol fs = factored(scheme);

    // f is symmetric about pi, so integrate 2 * Int_0^pi. Panels refine
    // geometrically into both x = 0 and x = pi; the symbol vanishes at 0
    // always and at pi for the boundary FBN parameters, and ln f stays
    // integrable in both cases. The dropped innermost slivers contribute
    // O(eps |ln eps|) with eps = pi 2^{-48}.
    constexpr int kLevels = 48;
    const GaussRule& rule = gauss_rule(16);

    auto integrate_panel = [&](double a, double b, int splits) {
        double sum = 0.0;
        const double w = (b - a) / splits;
        for (int sp = 0; sp < splits; ++sp) {
            const double lo = a + sp * w;
            const double mid = lo + 0.5 * w;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q)
                sum += rule.weights[q] * log_symbol(fs, mid + 0.5 * w * rule.nodes[q]);
        }
        return sum * 0.5 * w;
    };

    auto integrate_half = [&](int splits) {
        double total = 0.0;
        // [pi/2^{j+1}, pi/2^j] toward 0, then mirrored panels toward pi.
        for (int j = 0; j < kLevels; ++j) {
            const double hi = kPi / 2.0 * std::pow(0.5, j);
            const double lo = hi * 0.5;
            total += integrate_panel(lo, hi, splits);
            total += integrate_panel(kPi - hi, kPi - lo, splits);
        }
        return 2.0 * total;
    };

    double prev = integrate_half(1);
    for (int splits = 2; splits <= 16; splits *= 2) {
        const double cur = integrate_half(splits);
        if (std::abs(cur - prev) <= 0.5 * quad_tol) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    return std::exp(prev / (2.0 * kPi));
}

}  // namespace fraccable
