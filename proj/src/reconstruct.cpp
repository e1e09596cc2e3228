#include "shannon/reconstruct.hpp"

#include "shannon/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shannon::reconstruct {

using specfun::pi;
using specfun::sinc;

namespace {

void require_coverage(const sampling::SampleSet& samples, long a, long b,
                      const char* who)
{
    if (!samples.covers(a, b)) {
        throw std::out_of_range(std::string(who) +
                                ": sample index range does not cover the sum");
    }
}

} // namespace

double shannon_partial_sum(const sampling::SampleSet& samples, long T, double t)
{
    require_coverage(samples, -T, T, "shannon_partial_sum");
    const double L = samples.rate;
    // Compensated accumulation: the summands alternate in sign and T can
    // reach 2^15, so plain summation loses a few digits.
    double sum = 0.0;
    double carry = 0.0;
    for (long k = -T; k <= T; ++k) {
        const double term = samples.at(k) * sinc(L * pi * t - k * pi);
        const double y = term - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double s_T_function(long T, double L, double t)
{
    if (T < 1) {
        throw std::invalid_argument("s_T_function: T must be >= 1");
    }
    double sum = 0.0;
    double carry = 0.0;
    for (long k = -T; k <= T; ++k) {
        const double term = std::abs(sinc(L * pi * t - k * pi));
        const double y = term - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double freq_regularized_sum(const sampling::SampleSet& samples,
                            const windows::FrequencyWindow& w, long T, double t)
{
    require_coverage(samples, -T, T, "freq_regularized_sum");
    const double L = samples.rate;
    double sum = 0.0;
    double carry = 0.0;
    for (long k = -T; k <= T; ++k) {
        const double term =
            samples.at(k) / L * w.time(t - static_cast<double>(k) / L);
        const double y = term - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double time_regularized(const sampling::SampleSet& samples,
                        const windows::TimeWindow& w, double t,
                        long* terms_touched)
{
    const double L = samples.rate;
    const long m = w.truncation();
    const double Lt = L * t;
    const double nearest = std::round(Lt);
    // At sampling nodes the sinc factor degenerates; return the sample.
    if (std::abs(Lt - nearest) < 1e-12) {
        const long n = static_cast<long>(nearest);
        require_coverage(samples, n, n, "time_regularized");
        if (terms_touched != nullptr) {
            *terms_touched = 1;
        }
        return samples.at(n);
    }
    const long k_lo = static_cast<long>(std::ceil(Lt - m));
    const long k_hi = static_cast<long>(std::floor(Lt + m));
    require_coverage(samples, k_lo, k_hi, "time_regularized");
    double sum = 0.0;
    long touched = 0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double u = t - static_cast<double>(k) / L;
        sum += samples.at(k) * sinc(pi * (Lt - k)) * w(u);
        ++touched;
    }
    if (terms_touched != nullptr) {
        *terms_touched = touched;
    }
    return sum;
}

double Reconstructor::operator()(double t) const
{
    struct Visitor {
        const Reconstructor& r;
        double t;
        double operator()(const ClassicalShannon& m) const
        {
            return shannon_partial_sum(r.samples, m.T, t);
        }
        double operator()(const FrequencyReg& m) const
        {
            return freq_regularized_sum(r.samples, m.window, m.T, t);
        }
        double operator()(const TimeReg& m) const
        {
            return time_regularized(r.samples, m.window, t);
        }
    };
    return std::visit(Visitor{*this, t}, method);
}

std::vector<double> make_grid(double t_lo, double t_hi, long S)
{
    if (!(t_lo < t_hi)) {
        throw std::invalid_argument("make_grid: t_lo < t_hi required");
    }
    if (S < 2) {
        throw std::invalid_argument("make_grid: S >= 2 required");
    }
    std::vector<double> grid(static_cast<std::size_t>(S));
    const double step = (t_hi - t_lo) / static_cast<double>(S - 1);
    for (long s = 0; s < S; ++s) {
        grid[static_cast<std::size_t>(s)] = t_lo + step * static_cast<double>(s);
    }
    grid.back() = t_hi;
    return grid;
}

std::vector<double> evaluate_on_grid(const Reconstructor& r, double t_lo,
                                     double t_hi, long S)
{
    const std::vector<double> grid = make_grid(t_lo, t_hi, S);
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = r(grid[i]);
    }
    return out;
}

} // namespace shannon::reconstruct
