#pragma once

namespace fraccable {

/// Gamma function for strictly positive arguments. Negative or zero
/// arguments are rejected: nothing in this library needs them.
double gamma_fn(double x);

struct MLSeriesParams {
    double gamma_order = 1.0;  // gamma in (0, 1]
    double rel_tol = 1e-15;
    int max_terms = 200;

    void validate() const;
};

struct MLValue {
    double value = 0.0;
    bool converged = false;
    double last_term = 0.0;  // magnitude of the last summed term
    int terms_used = 0;
};

/// E_gamma(-t^gamma) = sum_{j>=0} (-t^gamma)^j / Gamma(gamma*j + 1) for t >= 0.
/// Truncates when |term| < rel_tol * |partial sum|; a run out of terms is
/// reported through `converged` / `last_term` rather than thrown.
MLValue mittag_leffler_neg(const MLSeriesParams& params, double t);

}  // namespace fraccable
