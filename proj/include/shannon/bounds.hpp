#pragma once

// Closed-form evaluation of the norm, approximation-error, and
// robustness bounds, plus numerical computation of the Shannon operator
// norm.

namespace shannon::bounds {

struct NormBracket {
    double lower;
    double upper;
    long T;
};

// (2/pi)(ln T + 2 ln 2 + gamma) -+ remainder terms.
NormBracket shannon_norm_bracket(long T);

// max_t s_T(t), searched on [0, 1/L] with a coarse grid of
// `refinement` points plus golden-section refinement near the best
// point; the maximum sits near t = 1/(2L).
double shannon_norm_numeric(long T, double L, long refinement = 10000);

// s_T(1/(2L)) in closed form:
// (4/pi) sum_{k=1}^{T} 1/(2k-1) + 2/(pi (2T+1)).
double s_T_at_half_node(long T);

struct NoiseBounds {
    double lower;  // eps ((2/pi) ln T + 5/4)
    double upper;  // lower + eps/(2T)
};

NoiseBounds noise_error_bounds(long T, double epsilon);

// sqrt(2L/3) (2(1+lambda)/(pi^2 lambda)) (T-L)^{-3/2} ||f||.
double freq_lin_error_bound(int N, double lambda, long T, double f_norm);

// sqrt(2L/5) (24(1+lambda)^2/(pi^3 lambda^2)) (T-L)^{-5/2} ||f||; also
// covers the raised-cosine and conv-B-spline windows.
double freq_cub_error_bound(int N, double lambda, long T, double f_norm);

// sqrt(N) e^{-m pi lambda/(1+lambda)} ||f||.
double sinh_error_bound(int N, double lambda, int m, double f_norm);

// (7 sqrt(N) m pi lambda (1+lambda+4 m lambda)/(4(1+lambda)^2))
//   e^{-m pi lambda/(1+lambda)} ||f||; requires lambda >= 1/(m-1).
double ckb_error_bound(int N, double lambda, int m, double f_norm);

// eps (2 + L phihat(0)).
double robustness_bound_general(double epsilon, double L, double phi_hat_zero);

// eps (2 + sqrt((2+2 lambda)/lambda) sqrt(m)/(1 - e^{-2 beta})),
// beta = pi m lambda/(1+lambda).
double robustness_bound_sinh(double epsilon, double lambda, int m);

// eps (2 + sqrt((2+2 lambda)/lambda) sqrt(m)).
double robustness_bound_ckb(double epsilon, double lambda, int m);

} // namespace shannon::bounds

namespace shannon::windows {
class TimeWindow;
}

namespace shannon::bounds {

// Quadrature diagnostics for the generic time-window error constants
// E1 = sqrt(N) max_{v in [-N/2, N/2]} |1 - int_{v-L/2}^{v+L/2} phihat|
// and E2 = sqrt(2L)/(pi m) phi(m/L).
double e1_diagnostic(const windows::TimeWindow& w, int v_grid_points = 33);
double e2_diagnostic(const windows::TimeWindow& w);

} // namespace shannon::bounds
