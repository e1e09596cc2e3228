#include "shannon/specfun.hpp"

#include "shannon/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace shannon::specfun {

double sinc(double x)
{
    // Two-term Taylor branch avoids cancellation in sin(x)/x near zero.
    if (std::abs(x) < 1e-4) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

double bessel_i0(double x, SeriesTolerance tol)
{
    if (!(std::abs(x) <= 700.0)) {
        throw std::overflow_error("bessel_i0: |x| > 700 exceeds double range");
    }
    // I0(x) = sum_k (x^2/4)^k / (k!)^2; all terms positive.
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 1; k < 1000; ++k) {
        term *= q / static_cast<double>(k * k);
        sum += term;
        if (term < tol.rel_cutoff * sum) {
            break;
        }
    }
    return sum;
}

double struve_l0(double x, SeriesTolerance tol)
{
    if (!(std::abs(x) <= 700.0)) {
        throw std::overflow_error("struve_l0: |x| > 700 exceeds double range");
    }
    // L0(x) = (2x/pi) sum_k x^{2k} / ((2k+1)!!)^2
    const double q = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 1; k < 1000; ++k) {
        const double odd = static_cast<double>(2 * k + 1);
        term *= q / (odd * odd);
        sum += term;
        if (term < tol.rel_cutoff * sum) {
            break;
        }
    }
    return 2.0 * x / pi * sum;
}

namespace {

// Power series Si(x) = sum_k (-1)^k x^{2k+1} / ((2k+1)(2k+1)!),
// adequate in double precision for |x| <= 16.
double sine_integral_series(double x)
{
    double term = x;
    double sum = x;
    const double q = x * x;
    for (std::size_t k = 1; k < 200; ++k) {
        const double n = static_cast<double>(2 * k);
        term *= -q / (n * (n + 1.0));
        const double contrib = term / (n + 1.0);
        sum += contrib;
        if (std::abs(contrib) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Asymptotic auxiliary functions: Si(x) = pi/2 - f(x) cos x - g(x) sin x,
// f(x) ~ (1/x) sum (-1)^k (2k)!/x^{2k}, g(x) ~ (1/x^2) sum (-1)^k (2k+1)!/x^{2k}.
// Both series are summed to their smallest term.
double sine_integral_asymptotic(double x)
{
    const double q = 1.0 / (x * x);
    double f = 0.0;
    double term = 1.0 / x;
    for (std::size_t k = 0; k < 40; ++k) {
        f += term;
        const double n = static_cast<double>(2 * k);
        const double next = -term * (n + 1.0) * (n + 2.0) * q;
        if (std::abs(next) >= std::abs(term)) {
            break;
        }
        term = next;
    }
    double g = 0.0;
    term = q;
    for (std::size_t k = 0; k < 40; ++k) {
        g += term;
        const double n = static_cast<double>(2 * k);
        const double next = -term * (n + 2.0) * (n + 3.0) * q;
        if (std::abs(next) >= std::abs(term)) {
            break;
        }
        term = next;
    }
    return pi / 2.0 - f * std::cos(x) - g * std::sin(x);
}

} // namespace

double sine_integral(double x)
{
    const double ax = std::abs(x);
    const double si = ax <= 16.0 ? sine_integral_series(ax)
                                 : sine_integral_asymptotic(ax);
    return std::signbit(x) ? -si : si;
}

double harmonic(long T)
{
    if (T < 1) {
        throw std::invalid_argument("harmonic: T must be >= 1");
    }
    // Sum smallest terms first.
    double sum = 0.0;
    for (long k = T; k >= 1; --k) {
        sum += 1.0 / static_cast<double>(k);
    }
    return sum;
}

namespace {

// I0(x) - L0(x). The direct difference loses ~x/ln(10) digits to
// cancellation, so beyond x = 20 we switch to the complementary integral
// (2/pi) \int_0^{pi/2} exp(-x cos s) ds, whose integrand is smooth.
double i0_minus_l0(double x)
{
    if (x <= 20.0) {
        return bessel_i0(x) - struve_l0(x);
    }
    static const quadrature::GaussLegendreRule rule(64);
    const double integral =
        rule.integrate([x](double s) { return std::exp(-x * std::cos(s)); },
                       0.0, pi / 2.0);
    return 2.0 / pi * integral;
}

} // namespace

double ckb_bracket(double beta)
{
    if (!(beta > 0.0)) {
        throw std::invalid_argument("ckb_bracket: beta must be positive");
    }
    if (beta > 700.0) {
        throw std::overflow_error("ckb_bracket: beta > 700 exceeds double range");
    }
    return i0_minus_l0(beta) - 1.0 + 2.0 / pi * sine_integral(beta);
}

} // namespace shannon::specfun
