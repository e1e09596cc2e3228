#pragma once

#include <functional>

// Time-domain and frequency-domain window functions together with their
// dual representations (closed-form inverse Fourier transforms where
// available, quadrature otherwise).

namespace shannon::windows {

// Bandwidth N, oversampling lambda, sampling rate L = N (1 + lambda).
struct SamplingConfig {
    int bandwidth = 1;        // N; the function band is [-N/2, N/2]
    double oversampling = 0;  // lambda >= 0

    SamplingConfig(int N, double lambda);

    double rate() const { return static_cast<double>(bandwidth) * (1.0 + oversampling); }
    double band_edge() const { return 0.5 * bandwidth; }       // N/2
    double rate_edge() const { return 0.5 * rate(); }          // L/2
};

enum class TimeWindowKind {
    SinhType,
    ContinuousKaiserBessel,
};

// Compactly supported regularizer phi on [-m/L, m/L], even, phi(0) = 1,
// monotonously non-increasing on [0, m/L], with shape beta = pi m (L-N)/L.
class TimeWindow {
public:
    TimeWindow(TimeWindowKind kind, int m, SamplingConfig config);

    // Test seam: same window shape with an explicitly overridden beta.
    static TimeWindow with_beta(TimeWindowKind kind, int m, SamplingConfig config,
                                double beta);

    TimeWindowKind kind() const { return kind_; }
    int truncation() const { return m_; }
    double beta() const { return beta_; }
    const SamplingConfig& config() const { return config_; }
    double support_radius() const { return m_ / config_.rate(); }

    // phi(t)
    double operator()(double t) const;

    // phihat(v) = 2 \int_0^{m/L} phi(t) cos(2 pi v t) dt.  Closed form for
    // the continuous Kaiser-Bessel window, 64-panel Gauss-Legendre
    // quadrature for the sinh-type window.
    double fourier(double v) const;

private:
    TimeWindowKind kind_;
    int m_;
    SamplingConfig config_;
    double beta_;
};

// Samples evenness, support, phi(0)=1, range [0,1] and monotone
// non-increase of phi on [0, m/L] on a grid of `grid_points` points.
bool validate_phi_membership(const TimeWindow& w, int grid_points);

enum class FreqWindowKind {
    Linear,
    Cubic,
    RaisedCosine,
    ConvBSpline2,
};

// Band-shaping multiplier psihat: 1 on [-N/2, N/2], 0 outside
// (-L/2, L/2), monotone in between; requires lambda > 0.
class FrequencyWindow {
public:
    FrequencyWindow(FreqWindowKind kind, SamplingConfig config);

    FreqWindowKind kind() const { return kind_; }
    const SamplingConfig& config() const { return config_; }

    // psihat(v)
    double hat(double v) const;

    // psi(t), the inverse Fourier transform of psihat, in closed form.
    double time(double t) const;

private:
    FreqWindowKind kind_;
    SamplingConfig config_;
};

const char* to_string(TimeWindowKind kind);
const char* to_string(FreqWindowKind kind);

} // namespace shannon::windows
