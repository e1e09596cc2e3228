#include "shannon/sweeps.hpp"

#include "shannon/reconstruct.hpp"
#include "shannon/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace shannon::sweeps {

using specfun::pi;
using specfun::sinc;

namespace {

void check_ts(const std::vector<long>& Ts)
{
    if (Ts.empty()) {
        throw std::invalid_argument("sweep: empty T list");
    }
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (Ts[i] < 0 || (i > 0 && Ts[i] <= Ts[i - 1])) {
            throw std::invalid_argument("sweep: T list must be strictly ascending");
        }
    }
}

// Maximize g by golden-section search on [a, b].
template <class G>
double golden_max(G&& g, double a, double b)
{
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int iter = 0; iter < 200 && (b - a) > 1e-14; ++iter) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    return std::max(g(0.5 * (a + b)), std::max(g1, g2));
}

} // namespace

std::vector<double> classical_max_error_sweep(
    const sampling::BandlimitedTestFunction& f,
    const sampling::SampleSet& samples, const std::vector<long>& Ts, long S,
    double t_lo, double t_hi)
{
    check_ts(Ts);
    const long Tmax = Ts.back();
    if (!samples.covers(-Tmax, Tmax)) {
        throw std::out_of_range("classical_max_error_sweep: samples too short");
    }
    const double L = samples.rate;
    const std::vector<double> grid = reconstruct::make_grid(t_lo, t_hi, S);
    std::vector<double> max_err(Ts.size(), 0.0);
    for (const double t : grid) {
        const double x = L * t;
        const double base = std::sin(pi * x) / pi;
        const double ft = f(t);
        auto term = [&](long k) {
            const double d = x - static_cast<double>(k);
            double kern;
            if (std::abs(d) < 1e-6) {
                kern = sinc(pi * d);
            } else {
                kern = ((k & 1L) != 0 ? -base : base) / d;
            }
            return samples.at(k) * kern;
        };
        double sum = term(0);
        std::size_t ci = 0;
        for (long j = 0; j <= Tmax; ++j) {
            if (j > 0) {
                sum += term(j) + term(-j);
            }
            while (ci < Ts.size() && Ts[ci] == j) {
                const double err = std::abs(sum - ft);
                if (err > max_err[ci]) {
                    max_err[ci] = err;
                }
                ++ci;
            }
        }
    }
    return max_err;
}

std::vector<double> freq_max_error_sweep(
    const sampling::BandlimitedTestFunction& f,
    const sampling::SampleSet& samples, const windows::FrequencyWindow& w,
    const std::vector<long>& Ts, long S, double t_lo, double t_hi)
{
    check_ts(Ts);
    const long Tmax = Ts.back();
    if (!samples.covers(-Tmax, Tmax)) {
        throw std::out_of_range("freq_max_error_sweep: samples too short");
    }
    const double L = samples.rate;
    const double N = w.config().bandwidth;
    const double A = 0.5 * (N + L) * pi;
    const double B = 0.5 * (L - N) * pi;
    const double C = 0.5 * (N + L);
    const double inv_L = 1.0 / L;
    const double diff = L - N;
    const windows::FreqWindowKind kind = w.kind();

    // Per-sample trigonometric tables; the angle-addition step inside the
    // hot loop then needs no libm calls.
    const std::size_t n = static_cast<std::size_t>(Tmax) + 1;
    std::vector<double> cAk(n), sAk(n), cBk(n), sBk(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double kl = static_cast<double>(j) * inv_L;
        cAk[j] = std::cos(A * kl);
        sAk[j] = std::sin(A * kl);
        cBk[j] = std::cos(B * kl);
        sBk[j] = std::sin(B * kl);
    }

    const std::vector<double> grid = reconstruct::make_grid(t_lo, t_hi, S);
    std::vector<double> max_err(Ts.size(), 0.0);
    for (const double t : grid) {
        const double sA = std::sin(A * t);
        const double cA = std::cos(A * t);
        const double sB = std::sin(B * t);
        const double cB = std::cos(B * t);
        const double ft = f(t);
        auto term = [&](long j, double sg) {
            const std::size_t ja = static_cast<std::size_t>(j);
            const long k = sg > 0 ? j : -j;
            const double u = t - static_cast<double>(k) * inv_L;
                const double au = A * u;
                const double fk = samples.at(k) * inv_L;
                if (std::abs(au) < 0.01) {
                    return fk * w.time(u);
                }
                const double sinAu = sA * cAk[ja] - sg * cA * sAk[ja];
                const double core = C * sinAu / au;
                const double bu = B * u;
                double g = 0.0;
                bool exact = false;
                switch (kind) {
                case windows::FreqWindowKind::Linear: {
                    const double sinBu = sB * cBk[ja] - sg * cB * sBk[ja];
                    if (std::abs(bu) < 0.01) {
                        exact = true;
                    } else {
                        g = sinBu / bu;
                    }
                    break;
                }
                case windows::FreqWindowKind::Cubic: {
                    if (std::abs(bu) < 0.25) {
                        exact = true;
                    } else {
                        const double sinBu = sB * cBk[ja] - sg * cB * sBk[ja];
                        const double cosBu = cB * cBk[ja] + sg * sB * sBk[ja];
                        g = 3.0 * (sinBu / bu - cosBu) / (bu * bu);
                    }
                    break;
                }
                case windows::FreqWindowKind::RaisedCosine: {
                    const double s2 = diff * u * diff * u;
                    const double den = 1.0 - s2;
                    if (std::abs(den) < 1e-3) {
                        exact = true;
                    } else {
                        const double cosBu = cB * cBk[ja] + sg * sB * sBk[ja];
                        g = cosBu / den;
                    }
                    break;
                }
                case windows::FreqWindowKind::ConvBSpline2: {
                    if (std::abs(bu) < 0.25) {
                        exact = true;
                    } else {
                        const double cosBu = cB * cBk[ja] + sg * sB * sBk[ja];
                        g = 2.0 * (1.0 - cosBu) / (bu * bu);
                    }
                    break;
                }
                }
                return exact ? fk * w.time(u) : fk * core * g;
        };
        double sum = term(0, 1.0);
        std::size_t ci = 0;
        for (long j = 0; j <= Tmax; ++j) {
            if (j > 0) {
                sum += term(j, 1.0) + term(j, -1.0);
            }
            while (ci < Ts.size() && Ts[ci] == j) {
                const double err = std::abs(sum - ft);
                if (err > max_err[ci]) {
                    max_err[ci] = err;
                }
                ++ci;
            }
        }
    }
    return max_err;
}

double time_max_error(const sampling::BandlimitedTestFunction& f,
                      const sampling::SampleSet& samples,
                      const windows::TimeWindow& w, long S, double t_lo,
                      double t_hi)
{
    const std::vector<double> grid = reconstruct::make_grid(t_lo, t_hi, S);
    double max_err = 0.0;
    for (const double t : grid) {
        const double err =
            std::abs(reconstruct::time_regularized(samples, w, t) - f(t));
        if (err > max_err) {
            max_err = err;
        }
    }
    return max_err;
}

double worst_case_noise_value(double L, double eps, long T, double t)
{
    const double x = L * t;
    const double base = std::sin(pi * x) / pi;
    double sum = 0.0;
    for (long k = -T; k <= T; ++k) {
        const double d = x - static_cast<double>(k);
        const double sgn = (2 * k - 1 > 0) ? 1.0 : -1.0;
        if (std::abs(d) < 1e-6) {
            const double alt = (k & 1L) != 0 ? 1.0 : -1.0;  // (-1)^{k+1}
            sum += eps * alt * sgn * sinc(pi * d);
        } else {
            sum += -eps * sgn * base / d;
        }
    }
    return sum;
}

std::vector<NoisePeak> worst_case_noise_sweep(double L, double eps,
                                              const std::vector<long>& Ts,
                                              long S)
{
    check_ts(Ts);
    const long Tmax = Ts.back();
    const std::vector<double> grid = reconstruct::make_grid(-1.0, 1.0, S);
    std::vector<NoisePeak> peaks(Ts.size(), NoisePeak{0.0, 0.0});
    for (const double t : grid) {
        const double x = L * t;
        const double base = std::sin(pi * x) / pi;
        auto term = [&](long k) {
            const double d = x - static_cast<double>(k);
            const double sgn = (2 * k - 1 > 0) ? 1.0 : -1.0;
            if (std::abs(d) < 1e-6) {
                const double alt = (k & 1L) != 0 ? 1.0 : -1.0;  // (-1)^{k+1}
                return eps * alt * sgn * sinc(pi * d);
            }
            return -eps * sgn * base / d;
        };
        double sum = term(0);
        std::size_t ci = 0;
        for (long j = 0; j <= Tmax; ++j) {
            if (j > 0) {
                sum += term(j) + term(-j);
            }
            while (ci < Ts.size() && Ts[ci] == j) {
                const double a = std::abs(sum);
                if (a > peaks[ci].max_abs) {
                    peaks[ci].max_abs = a;
                    peaks[ci].argmax = t;
                }
                ++ci;
            }
        }
    }
    // The peak of |Delta_T| is a narrow spike of width ~1/L; refine it
    // inside the bracketing grid cells, since the theorem bounds the sup
    // over all t, not over the grid.
    const double h = (grid[1] - grid[0]);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const long T = Ts[i];
        auto g = [&](double t) {
            return std::abs(worst_case_noise_value(L, eps, T, t));
        };
        const double refined =
            golden_max(g, peaks[i].argmax - h, peaks[i].argmax + h);
        if (refined > peaks[i].max_abs) {
            peaks[i].max_abs = refined;
        }
    }
    return peaks;
}

} // namespace shannon::sweeps
