#pragma once

#include "shannon/sampling.hpp"
#include "shannon/windows.hpp"

#include <vector>

// Batched error sweeps over nested truncation radii.  A single pass over
// the sample index shares the partial sums between all requested T
// values, and the sinc kernels are evaluated through angle-addition
// identities with precomputed per-sample trigonometric tables, so a full
// T = 2^0..2^15 sweep over a 10^5-point grid runs in seconds.  Points
// too close to a removable singularity fall back to the exact evaluators
// of the windows module; results agree with the direct operators in
// reconstruct.hpp to roundoff.

namespace shannon::sweeps {

// max over the [t_lo, t_hi] grid of |f(t) - (S_T f)(t)| for each T in
// Ts (ascending).
std::vector<double> classical_max_error_sweep(
    const sampling::BandlimitedTestFunction& f,
    const sampling::SampleSet& samples, const std::vector<long>& Ts, long S,
    double t_lo = -1.0, double t_hi = 1.0);

// max over the grid of |f(t) - (P_{psi,T} f)(t)| for each T in Ts.
std::vector<double> freq_max_error_sweep(
    const sampling::BandlimitedTestFunction& f,
    const sampling::SampleSet& samples, const windows::FrequencyWindow& w,
    const std::vector<long>& Ts, long S, double t_lo = -1.0, double t_hi = 1.0);

// max over the grid of |f(t) - (R_{phi,m} f)(t)| (direct evaluation; the
// localized sum is already cheap).
double time_max_error(const sampling::BandlimitedTestFunction& f,
                      const sampling::SampleSet& samples,
                      const windows::TimeWindow& w, long S, double t_lo = -1.0,
                      double t_hi = 1.0);

// The worst-case perturbation response
// Delta_T(t) = sum_{|k|<=T} eps_k sinc(L pi t - k pi) with the sign
// pattern eps_k = eps (-1)^{k+1} sign(2k-1).
double worst_case_noise_value(double L, double eps, long T, double t);

struct NoisePeak {
    double max_abs;  // sup over the refined grid of |Delta_T|
    double argmax;
};

// Grid scan of |Delta_T| over [-1, 1] for each T in Ts, followed by
// golden-section refinement of the peak inside its bracketing grid cell
// (the grid alone undershoots the sharp maximum near t = 1/(2L)).
std::vector<NoisePeak> worst_case_noise_sweep(double L, double eps,
                                              const std::vector<long>& Ts,
                                              long S);

} // namespace shannon::sweeps
