#include "shannon/windows.hpp"

#include "shannon/quadrature.hpp"
#include "shannon/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace shannon::windows {

using specfun::pi;
using specfun::sinc;

SamplingConfig::SamplingConfig(int N, double lambda)
    : bandwidth(N), oversampling(lambda)
{
    if (N < 1) {
        throw std::invalid_argument("SamplingConfig: bandwidth must be >= 1");
    }
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("SamplingConfig: oversampling must be >= 0");
    }
}

TimeWindow::TimeWindow(TimeWindowKind kind, int m, SamplingConfig config)
    : kind_(kind), m_(m), config_(config)
{
    if (m < 2) {
        throw std::invalid_argument("TimeWindow: truncation m must be >= 2");
    }
    if (2.0 * m > config.rate()) {
        throw std::invalid_argument("TimeWindow: 2m <= L required");
    }
    const double L = config.rate();
    beta_ = pi * m * (L - config.bandwidth) / L;
    if (!(beta_ > 0.0)) {
        throw std::invalid_argument("TimeWindow: oversampling must be positive");
    }
}

TimeWindow TimeWindow::with_beta(TimeWindowKind kind, int m, SamplingConfig config,
                                 double beta)
{
    TimeWindow w(kind, m, config);
    w.beta_ = beta;
    return w;
}

double TimeWindow::operator()(double t) const
{
    const double r = support_radius();
    if (std::abs(t) > r) {
        return 0.0;
    }
    const double x = t / r;
    const double root = std::sqrt(std::max(0.0, 1.0 - x * x));
    switch (kind_) {
    case TimeWindowKind::SinhType:
        return std::sinh(beta_ * root) / std::sinh(beta_);
    case TimeWindowKind::ContinuousKaiserBessel:
        return (specfun::bessel_i0(beta_ * root) - 1.0) /
               (specfun::bessel_i0(beta_) - 1.0);
    }
    return 0.0;
}

namespace {

// sinh(x)/x, continued with 1 at x = 0.
double sinhc(double x)
{
    if (std::abs(x) < 1e-4) {
        return 1.0 + x * x / 6.0;
    }
    return std::sinh(x) / x;
}

} // namespace

double TimeWindow::fourier(double v) const
{
    const double L = config_.rate();
    if (kind_ == TimeWindowKind::ContinuousKaiserBessel) {
        const double w = 2.0 * pi * m_ * v / (beta_ * L);
        const double scale = 2.0 * m_ / ((specfun::bessel_i0(beta_) - 1.0) * L);
        if (std::abs(w) < 1.0) {
            const double root = std::sqrt(1.0 - w * w);
            return scale * (sinhc(beta_ * root) - sinc(beta_ * w));
        }
        const double root = std::sqrt(w * w - 1.0);
        return scale * (sinc(beta_ * root) - sinc(beta_ * w));
    }
    // No closed form for the sinh-type window; integrate
    // 2 \int_0^{m/L} phi(t) cos(2 pi v t) dt.
    static const quadrature::GaussLegendreRule rule(10);
    const double r = support_radius();
    const double integral = rule.integrate_panels(
        [this, v](double t) { return (*this)(t)*std::cos(2.0 * pi * v * t); },
        0.0, r, 64);
    return 2.0 * integral;
}

bool validate_phi_membership(const TimeWindow& w, int grid_points)
{
    if (grid_points < 16) {
        throw std::invalid_argument("validate_phi_membership: grid_points >= 16 required");
    }
    const double r = w.support_radius();
    if (std::abs(w(0.0) - 1.0) > 1e-12) {
        return false;
    }
    double prev = w(0.0);
    for (int i = 0; i <= grid_points; ++i) {
        const double t = r * i / grid_points;
        const double f = w(t);
        if (!(f >= 0.0 && f <= 1.0)) {
            return false;
        }
        if (std::abs(f - w(-t)) > 1e-12) {
            return false;
        }
        if (f > prev + 1e-12) {
            return false;  // not monotonously non-increasing
        }
        prev = f;
    }
    for (int i = 1; i <= 8; ++i) {
        if (w(r * (1.0 + 0.1 * i)) != 0.0 || w(-r * (1.0 + 0.1 * i)) != 0.0) {
            return false;
        }
    }
    return true;
}

FrequencyWindow::FrequencyWindow(FreqWindowKind kind, SamplingConfig config)
    : kind_(kind), config_(config)
{
    if (!(config.oversampling > 0.0)) {
        throw std::invalid_argument("FrequencyWindow: oversampling must be positive");
    }
}

double FrequencyWindow::hat(double v) const
{
    const double N = config_.bandwidth;
    const double L = config_.rate();
    const double a = std::abs(v);
    if (a <= 0.5 * N) {
        return 1.0;
    }
    if (a >= 0.5 * L) {
        return 0.0;
    }
    switch (kind_) {
    case FreqWindowKind::Linear:
        return 1.0 - (2.0 * a - N) / (L - N);
    case FreqWindowKind::Cubic: {
        const double c = L - N;
        const double u = a - 0.5 * L;
        return 16.0 / (c * c * c) * u * u * (a - 0.25 * (3.0 * N - L));
    }
    case FreqWindowKind::RaisedCosine:
        return 0.5 + 0.5 * std::cos((2.0 * a - N) / (L - N) * pi);
    case FreqWindowKind::ConvBSpline2: {
        // Indicator of [-(N+L)/4, (N+L)/4] convolved with the rescaled
        // order-2 centered cardinal B-spline; quadratic pieces with knots
        // at N/2, (N+L)/4, L/2.
        const double d = 0.25 * (L - N);
        const double x = a - 0.25 * (N + L);  // in [-d, d] here
        if (x <= 0.0) {
            const double y = x + d;
            return 1.0 - y * y / (2.0 * d * d);
        }
        const double y = d - x;
        return y * y / (2.0 * d * d);
    }
    }
    return 0.0;
}

namespace {

// 3 (sinc x - cos x) / x^2, continued with 1 at x = 0.
double cubic_kernel_factor(double x)
{
    const double ax = std::abs(x);
    if (ax < 0.25) {
        // The direct form loses ~eps/x^2 absolute accuracy below this
        // radius; the series is exact to double precision here.
        const double q = x * x;
        return 1.0 + q * (-1.0 / 10.0 + q * (1.0 / 280.0 - q / 15120.0));
    }
    return 3.0 * (sinc(x) - std::cos(x)) / (x * x);
}

} // namespace

double FrequencyWindow::time(double t) const
{
    const double N = config_.bandwidth;
    const double L = config_.rate();
    const double peak = 0.5 * (N + L);
    const double half_sum = 0.5 * (N + L) * pi;   // A
    const double half_diff = 0.5 * (L - N) * pi;  // B
    switch (kind_) {
    case FreqWindowKind::Linear:
        return peak * sinc(half_sum * t) * sinc(half_diff * t);
    case FreqWindowKind::Cubic:
        return peak * sinc(half_sum * t) * cubic_kernel_factor(half_diff * t);
    case FreqWindowKind::RaisedCosine: {
        // cos(B t) / (1 - t^2 (L-N)^2) rewritten via the complement
        // d = 1 - |t|(L-N); removable singularities at |t| = 1/(L-N).
        const double s = std::abs(t) * (L - N);
        const double d = 1.0 - s;
        const double factor = 0.5 * pi * sinc(0.5 * pi * d) / (1.0 + s);
        return peak * sinc(half_sum * t) * factor;
    }
    case FreqWindowKind::ConvBSpline2: {
        const double q = sinc(0.5 * half_diff * t);
        return peak * sinc(half_sum * t) * q * q;
    }
    }
    return 0.0;
}

const char* to_string(TimeWindowKind kind)
{
    switch (kind) {
    case TimeWindowKind::SinhType: return "sinh";
    case TimeWindowKind::ContinuousKaiserBessel: return "ckb";
    }
    return "?";
}

const char* to_string(FreqWindowKind kind)
{
    switch (kind) {
    case FreqWindowKind::Linear: return "lin";
    case FreqWindowKind::Cubic: return "cub";
    case FreqWindowKind::RaisedCosine: return "cos";
    case FreqWindowKind::ConvBSpline2: return "conv2";
    }
    return "?";
}

} // namespace shannon::windows
