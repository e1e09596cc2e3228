#pragma once

#include "shannon/sampling.hpp"
#include "shannon/windows.hpp"

#include <variant>
#include <vector>

// The three reconstruction operators: truncated Shannon sum,
// frequency-window partial sum, and localized time-window regularized
// interpolation.

namespace shannon::reconstruct {

// (S_T f)(t) = sum_{k=-T}^{T} f(k/L) sinc(L pi t - k pi).
double shannon_partial_sum(const sampling::SampleSet& samples, long T, double t);

// s_T(t) = sum_{k=-T}^{T} |sinc(L pi t - k pi)|.
double s_T_function(long T, double L, double t);

// (P_{psi,T} f)(t) = sum_{k=-T}^{T} f(k/L) (1/L) psi(t - k/L).
double freq_regularized_sum(const sampling::SampleSet& samples,
                            const windows::FrequencyWindow& w, long T, double t);

// (R_{phi,m} f)(t): localized sum over the at most 2m+1 indices k with
// |k - Lt| <= m of f(k/L) sinc(L pi t - k pi) phi(t - k/L).  If
// terms_touched is non-null it receives the number of samples read.
double time_regularized(const sampling::SampleSet& samples,
                        const windows::TimeWindow& w, double t,
                        long* terms_touched = nullptr);

struct ClassicalShannon {
    long T;
};

struct FrequencyReg {
    windows::FrequencyWindow window;
    long T;
};

struct TimeReg {
    windows::TimeWindow window;
};

using Method = std::variant<ClassicalShannon, FrequencyReg, TimeReg>;

struct Reconstructor {
    Method method;
    sampling::SampleSet samples;

    double operator()(double t) const;
};

// Equispaced grid of S points spanning [t_lo, t_hi], both endpoints
// included (step (t_hi - t_lo)/(S - 1)).
std::vector<double> make_grid(double t_lo, double t_hi, long S);

std::vector<double> evaluate_on_grid(const Reconstructor& r, double t_lo,
                                     double t_hi, long S);

} // namespace shannon::reconstruct
