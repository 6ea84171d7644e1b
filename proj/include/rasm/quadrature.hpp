#pragma once

#include <vector>

namespace rasm {

// Gauss-Legendre rule on [-1, 1], computed once per node count via Newton
// iteration on the Legendre polynomial roots.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

} // namespace rasm
