#include "shannon/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace shannon::quadrature {

// Newton iteration on Legendre polynomials, cf. the usual gauleg recipe.
GaussLegendreRule::GaussLegendreRule(std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("GaussLegendreRule: order must be positive");
    }
    const std::size_t n = order;
    nodes.resize(n);
    weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

} // namespace shannon::quadrature
