#pragma once

#include <vector>

namespace stieltjes {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const { return static_cast<int>(nodes.size()); }
};

// Nodes by Newton iteration on P_n in long double; accurate to a few ulps.
GaussRule gauss_legendre(int order);

// The fixed 20-point panel rule used by the production integrator.
const GaussRule& panel_rule();

}  // namespace stieltjes
