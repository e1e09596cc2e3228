#pragma once

#include <cstddef>

// Scalar special functions used by the window formulas and error bounds.
// All functions are pure and thread-safe.

namespace shannon::specfun {

inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr double pi = 3.141592653589793238462643383279502884;

// Relative cutoff for power-series summation.
struct SeriesTolerance {
    double rel_cutoff = 1e-17;
};

// sinc(x) = sin(x)/x, continued with 1 at x = 0.
double sinc(double x);

// Modified Bessel function of the first kind, order zero.
// Throws std::overflow_error for |x| > 700.
double bessel_i0(double x, SeriesTolerance tol = {});

// Modified Struve function of order zero (odd function).
// Throws std::overflow_error for |x| > 700.
double struve_l0(double x, SeriesTolerance tol = {});

// Sine integral Si(x) = \int_0^x sinc(w) dw.
double sine_integral(double x);

// T-th harmonic number, T >= 1.
double harmonic(long T);

// I0(beta) - L0(beta) - 1 + (2/pi) Si(beta); lies in (0,1) for the
// shape parameters that occur in the continuous Kaiser-Bessel bounds.
double ckb_bracket(double beta);

} // namespace shannon::specfun
