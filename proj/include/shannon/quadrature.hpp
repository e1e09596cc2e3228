#pragma once

#include <cstddef>
#include <vector>

// Fixed-order Gauss-Legendre rules for the smooth, compactly supported
// integrands that occur in window transforms.

namespace shannon::quadrature {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;

    explicit GaussLegendreRule(std::size_t order);

    // \int_a^b f(x) dx with a single application of the rule.
    template <class F>
    double integrate(F&& f, double a, double b) const
    {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(mid + half * nodes[i]);
        }
        return half * sum;
    }

    // Composite rule over `panels` equal subintervals of [a, b].
    template <class F>
    double integrate_panels(F&& f, double a, double b, std::size_t panels) const
    {
        const double h = (b - a) / static_cast<double>(panels);
        double sum = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            sum += integrate(f, a + static_cast<double>(p) * h,
                             a + static_cast<double>(p + 1) * h);
        }
        return sum;
    }
};

} // namespace shannon::quadrature
