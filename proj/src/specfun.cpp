#include "fraccable/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fraccable {

double gamma_fn(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive, got " + std::to_string(x));
    return std::tgamma(x);
}

void MLSeriesParams::validate() const
{
    if (!(gamma_order > 0.0) || gamma_order > 1.0)
        throw std::invalid_argument("MLSeriesParams: gamma_order must lie in (0, 1]");
    if (!(rel_tol >= std::numeric_limits<double>::epsilon()))
        throw std::invalid_argument("MLSeriesParams: rel_tol below machine epsilon");
    if (max_terms < 1)
        throw std::invalid_argument("MLSeriesParams: max_terms must be >= 1");
}

MLValue mittag_leffler_neg(const MLSeriesParams& params, double t)
{
    params.validate();
    if (!(t >= 0.0))
        throw std::domain_error("mittag_leffler_neg: t must be nonnegative");

    MLValue out;
    if (t == 0.0) {
        out.value = 1.0;
        out.converged = true;
        out.terms_used = 1;
        return out;
    }

    const double z = -std::pow(t, params.gamma_order);
    double sum = 0.0;
    double zj = 1.0;  // z^j
    for (int j = 0; j < params.max_terms; ++j) {
        const double term = zj / std::tgamma(params.gamma_order * j + 1.0);
        sum += term;
        out.last_term = std::abs(term);
        out.terms_used = j + 1;
        if (j > 0 && out.last_term < params.rel_tol * std::abs(sum)) {
            out.converged = true;
            break;
        }
        zj *= z;
    }
    out.value = sum;
    return out;
}

}  // namespace fraccable
