#include "shannon/bounds.hpp"

#include "shannon/quadrature.hpp"
#include "shannon/specfun.hpp"
#include "shannon/windows.hpp"

#include <cmath>
#include <stdexcept>

namespace shannon::bounds {

using specfun::euler_gamma;
using specfun::pi;

NormBracket shannon_norm_bracket(long T)
{
    if (T < 1) {
        throw std::invalid_argument("shannon_norm_bracket: T must be >= 1");
    }
    const double Td = static_cast<double>(T);
    const double core = 2.0 / pi * (std::log(Td) + 2.0 * std::log(2.0) + euler_gamma);
    NormBracket b;
    b.T = T;
    b.lower = core - 1.0 / (pi * Td * (2.0 * Td + 1.0));
    b.upper = core + (Td + 2.0) / (pi * Td * (Td + 1.0));
    return b;
}

namespace {

// s_T(t) for t in (0, 1/L): every summand shares |sin(L pi t)|.
double s_T_fast(long T, double L, double t)
{
    const double x = L * t;
    if (x <= 0.0 || x >= 1.0) {
        return 1.0;  // node value
    }
    const double base = std::abs(std::sin(pi * x)) / pi;
    double sum = 0.0;
    for (long k = -T; k <= T; ++k) {
        sum += 1.0 / std::abs(x - static_cast<double>(k));
    }
    return base * sum;
}

} // namespace

double shannon_norm_numeric(long T, double L, long refinement)
{
    if (T < 1) {
        throw std::invalid_argument("shannon_norm_numeric: T must be >= 1");
    }
    if (!(L > 0.0) || refinement < 3) {
        throw std::invalid_argument("shannon_norm_numeric: bad parameters");
    }
    // Coarse scan of [0, 1/L]; the proof of the norm theorem places the
    // global maximum of s_T in this cell, near t = 1/(2L).
    const double step = 1.0 / (L * static_cast<double>(refinement - 1));
    double best = 0.0;
    double best_t = 0.5 / L;
    for (long i = 0; i < refinement; ++i) {
        const double t = static_cast<double>(i) * step;
        const double v = s_T_fast(T, L, t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    // Golden-section refinement around the best coarse point.
    double a = best_t - step;
    double b = best_t + step;
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = s_T_fast(T, L, x1);
    double g2 = s_T_fast(T, L, x2);
    for (int iter = 0; iter < 200 && (b - a) > 1e-15 / L; ++iter) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = s_T_fast(T, L, x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = s_T_fast(T, L, x1);
        }
    }
    return std::max(best, std::max(g1, g2));
}

double s_T_at_half_node(long T)
{
    if (T < 1) {
        throw std::invalid_argument("s_T_at_half_node: T must be >= 1");
    }
    double sum = 0.0;
    for (long k = T; k >= 1; --k) {
        sum += 1.0 / static_cast<double>(2 * k - 1);
    }
    return 4.0 / pi * sum + 2.0 / (pi * (2.0 * static_cast<double>(T) + 1.0));
}

NoiseBounds noise_error_bounds(long T, double epsilon)
{
    if (T < 1 || !(epsilon > 0.0)) {
        throw std::invalid_argument("noise_error_bounds: T >= 1 and eps > 0 required");
    }
    const double Td = static_cast<double>(T);
    NoiseBounds nb;
    nb.lower = epsilon * (2.0 / pi * std::log(Td) + 1.25);
    nb.upper = nb.lower + epsilon / (2.0 * Td);
    return nb;
}

namespace {

double check_freq_pre(int N, double lambda, long T)
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("frequency bound: lambda > 0 required");
    }
    const double L = static_cast<double>(N) * (1.0 + lambda);
    if (!(static_cast<double>(T) > L)) {
        throw std::invalid_argument("frequency bound: T > L required");
    }
    return L;
}

} // namespace

double freq_lin_error_bound(int N, double lambda, long T, double f_norm)
{
    const double L = check_freq_pre(N, lambda, T);
    const double gap = static_cast<double>(T) - L;
    return std::sqrt(2.0 * L / 3.0) * (2.0 * (1.0 + lambda) / (pi * pi * lambda)) *
           std::pow(gap, -1.5) * f_norm;
}

double freq_cub_error_bound(int N, double lambda, long T, double f_norm)
{
    const double L = check_freq_pre(N, lambda, T);
    const double gap = static_cast<double>(T) - L;
    return std::sqrt(2.0 * L / 5.0) *
           (24.0 * (1.0 + lambda) * (1.0 + lambda) / (pi * pi * pi * lambda * lambda)) *
           std::pow(gap, -2.5) * f_norm;
}

double sinh_error_bound(int N, double lambda, int m, double f_norm)
{
    if (!(lambda > 0.0) || m < 2) {
        throw std::invalid_argument("sinh_error_bound: lambda > 0 and m >= 2 required");
    }
    return std::sqrt(static_cast<double>(N)) *
           std::exp(-static_cast<double>(m) * pi * lambda / (1.0 + lambda)) * f_norm;
}

double ckb_error_bound(int N, double lambda, int m, double f_norm)
{
    if (m < 2) {
        throw std::invalid_argument("ckb_error_bound: m >= 2 required");
    }
    if (!(lambda >= 1.0 / (static_cast<double>(m) - 1.0))) {
        throw std::invalid_argument("ckb_error_bound: lambda >= 1/(m-1) required");
    }
    const double md = static_cast<double>(m);
    const double one_l = 1.0 + lambda;
    return 7.0 * std::sqrt(static_cast<double>(N)) * md * pi * lambda *
           (1.0 + lambda + 4.0 * md * lambda) / (4.0 * one_l * one_l) *
           std::exp(-md * pi * lambda / one_l) * f_norm;
}

double robustness_bound_general(double epsilon, double L, double phi_hat_zero)
{
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("robustness_bound_general: eps > 0 required");
    }
    return epsilon * (2.0 + L * phi_hat_zero);
}

double robustness_bound_sinh(double epsilon, double lambda, int m)
{
    if (!(epsilon > 0.0) || !(lambda > 0.0) || m < 2) {
        throw std::invalid_argument("robustness_bound_sinh: bad parameters");
    }
    const double md = static_cast<double>(m);
    const double beta = pi * md * lambda / (1.0 + lambda);
    return epsilon * (2.0 + std::sqrt((2.0 + 2.0 * lambda) / lambda) * std::sqrt(md) /
                                (1.0 - std::exp(-2.0 * beta)));
}

double robustness_bound_ckb(double epsilon, double lambda, int m)
{
    if (!(epsilon > 0.0) || !(lambda > 0.0) || m < 2) {
        throw std::invalid_argument("robustness_bound_ckb: bad parameters");
    }
    return epsilon *
           (2.0 + std::sqrt((2.0 + 2.0 * lambda) / lambda) * std::sqrt(m));
}

double e1_diagnostic(const windows::TimeWindow& w, int v_grid_points)
{
    if (v_grid_points < 2) {
        throw std::invalid_argument("e1_diagnostic: grid too small");
    }
    const double N = w.config().bandwidth;
    const double L = w.config().rate();
    const double r = w.support_radius();
    static const quadrature::GaussLegendreRule rule(10);
    // int_{v-L/2}^{v+L/2} phihat(u) du
    //   = 2 int_0^{m/L} phi(t) [sin(2 pi (v+L/2) t) - sin(2 pi (v-L/2) t)]
    //                   / (2 pi t) dt,
    // with the t -> 0 limit of the bracket equal to 2 pi L t.
    auto band_integral = [&](double v) {
        const double a = 2.0 * pi * (v - 0.5 * L);
        const double b = 2.0 * pi * (v + 0.5 * L);
        return 2.0 * rule.integrate_panels(
                         [&](double t) {
                             const double kern =
                                 t < 1e-12 ? (b - a)
                                           : (std::sin(b * t) - std::sin(a * t)) / t;
                             return w(t) * kern / (2.0 * pi);
                         },
                         0.0, r, 64);
    };
    double worst = 0.0;
    for (int i = 0; i < v_grid_points; ++i) {
        const double v =
            -0.5 * N + N * static_cast<double>(i) / (v_grid_points - 1);
        worst = std::max(worst, std::abs(1.0 - band_integral(v)));
    }
    return std::sqrt(N) * worst;
}

double e2_diagnostic(const windows::TimeWindow& w)
{
    const double L = w.config().rate();
    return std::sqrt(2.0 * L) / (pi * w.truncation()) * w(w.support_radius());
}

} // namespace shannon::bounds
