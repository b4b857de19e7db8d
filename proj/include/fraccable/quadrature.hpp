#pragma once

#include <vector>

namespace fraccable {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with `points` nodes (1..64), exact for polynomials of
/// degree 2*points - 1.
const GaussRule& gauss_rule(int points);

}  // namespace fraccable
