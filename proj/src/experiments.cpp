#include "shannon/experiments.hpp"

#include "shannon/bounds.hpp"
#include "shannon/reconstruct.hpp"
#include "shannon/rng.hpp"
#include "shannon/sampling.hpp"
#include "shannon/specfun.hpp"
#include "shannon/sweeps.hpp"
#include "shannon/windows.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace shannon::experiments {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

std::vector<long> powers_of_two(const std::vector<int>& exponents)
{
    if (exponents.empty()) {
        throw std::invalid_argument("experiment: empty T exponent list");
    }
    std::vector<long> Ts;
    Ts.reserve(exponents.size());
    for (const int c : exponents) {
        if (c < 0 || c > 24) {
            throw std::invalid_argument("experiment: T exponent out of range");
        }
        Ts.push_back(1L << c);
    }
    std::sort(Ts.begin(), Ts.end());
    Ts.erase(std::unique(Ts.begin(), Ts.end()), Ts.end());
    return Ts;
}

void require_lambdas(const ExperimentSpec& spec)
{
    if (spec.lambdas.empty()) {
        throw std::invalid_argument("experiment: empty lambda list");
    }
}

void require_ms(const ExperimentSpec& spec)
{
    if (spec.m_values.empty()) {
        throw std::invalid_argument("experiment: empty m list");
    }
    for (const int m : spec.m_values) {
        if (m < 2) {
            throw std::invalid_argument("experiment: m must be >= 2");
        }
    }
}

long integral_rate(int N, double lambda)
{
    return std::lround(static_cast<double>(N) * (1.0 + lambda));
}

const windows::FreqWindowKind kAllFreqKinds[] = {
    windows::FreqWindowKind::Linear,
    windows::FreqWindowKind::Cubic,
    windows::FreqWindowKind::RaisedCosine,
    windows::FreqWindowKind::ConvBSpline2,
};

const windows::TimeWindowKind kAllTimeKinds[] = {
    windows::TimeWindowKind::SinhType,
    windows::TimeWindowKind::ContinuousKaiserBessel,
};

double freq_bound_for(windows::FreqWindowKind kind, int N, double lambda, long T,
                      double f_norm)
{
    if (kind == windows::FreqWindowKind::Linear) {
        return bounds::freq_lin_error_bound(N, lambda, T, f_norm);
    }
    return bounds::freq_cub_error_bound(N, lambda, T, f_norm);
}

} // namespace

std::vector<ResultRow> run_norm_experiment(const ExperimentSpec& spec)
{
    require_lambdas(spec);
    const std::vector<long> Ts = powers_of_two(spec.T_exponents);
    std::vector<ResultRow> rows;
    for (const double lambda : spec.lambdas) {
        const double L = static_cast<double>(spec.N) * (1.0 + lambda);
        for (const long T : Ts) {
            const double numeric = bounds::shannon_norm_numeric(T, L);
            const bounds::NormBracket br = bounds::shannon_norm_bracket(T);
            rows.push_back({spec.name, "bracket_lower", spec.N, lambda,
                            static_cast<double>(T), 2 * T + 1, numeric, br.lower,
                            numeric > br.lower});
            rows.push_back({spec.name, "bracket_upper", spec.N, lambda,
                            static_cast<double>(T), 2 * T + 1, numeric, br.upper,
                            numeric < br.upper});
        }
    }
    return rows;
}

std::vector<ResultRow> run_nonrobustness_experiment(const ExperimentSpec& spec)
{
    require_lambdas(spec);
    const std::vector<long> Ts = powers_of_two(spec.T_exponents);
    std::vector<ResultRow> rows;
    for (const double lambda : spec.lambdas) {
        const double L = static_cast<double>(spec.N) * (1.0 + lambda);
        const std::vector<sweeps::NoisePeak> peaks =
            sweeps::worst_case_noise_sweep(L, spec.epsilon, Ts, spec.S);
        for (std::size_t i = 0; i < Ts.size(); ++i) {
            const long T = Ts[i];
            const double measured = peaks[i].max_abs;
            double bound = nan_v;
            bool pass = true;
            if (spec.epsilon > 0.0) {
                const bounds::NoiseBounds nb =
                    bounds::noise_error_bounds(T, spec.epsilon);
                bound = nb.upper;
                pass = nb.lower <= measured && measured <= nb.upper;
            }
            rows.push_back({spec.name, "worst_case", spec.N, lambda,
                            static_cast<double>(T), 2 * T + 1, measured, bound,
                            pass});
        }
    }
    return rows;
}

std::vector<ResultRow> run_freq_decay_experiment(const ExperimentSpec& spec)
{
    require_lambdas(spec);
    const std::vector<long> Ts = powers_of_two(spec.T_exponents);
    const sampling::BandlimitedTestFunction f{
        sampling::TestFunctionKind::UnitSinc, spec.N};
    std::vector<ResultRow> rows;
    for (const double lambda : spec.lambdas) {
        const windows::SamplingConfig cfg(spec.N, lambda);
        const double L = cfg.rate();
        const long Tmax = Ts.back();
        const sampling::SampleSet samples = sampling::take_samples(f, L, -Tmax, Tmax);
        for (const windows::FreqWindowKind kind : kAllFreqKinds) {
            const windows::FrequencyWindow w(kind, cfg);
            const std::vector<double> errs =
                sweeps::freq_max_error_sweep(f, samples, w, Ts, spec.S);
            for (std::size_t i = 0; i < Ts.size(); ++i) {
                const long T = Ts[i];
                double bound = nan_v;
                bool pass = true;
                if (static_cast<double>(T) > L) {
                    bound = freq_bound_for(kind, spec.N, lambda, T, f.l2_norm());
                    pass = errs[i] <= bound;
                }
                rows.push_back({spec.name, windows::to_string(kind), spec.N,
                                lambda, static_cast<double>(T), 2 * T + 1,
                                errs[i], bound, pass});
            }
        }
    }
    return rows;
}

std::vector<ResultRow> run_compare_experiment(const ExperimentSpec& spec)
{
    require_lambdas(spec);
    require_ms(spec);
    const sampling::BandlimitedTestFunction f{
        sampling::TestFunctionKind::ShiftedPair, spec.N};
    std::vector<ResultRow> rows;
    for (const double lambda : spec.lambdas) {
        const windows::SamplingConfig cfg(spec.N, lambda);
        const long L = integral_rate(spec.N, lambda);
        for (const int m : spec.m_values) {
            const long T = L + m;  // same sample count for every method
            const long used = 2 * T + 1;
            const sampling::SampleSet samples =
                sampling::take_samples(f, cfg.rate(), -T, T);
            const std::vector<long> Tone{T};

            const double classical_err =
                sweeps::classical_max_error_sweep(f, samples, Tone, spec.S)[0];
            rows.push_back({spec.name, "classical", spec.N, lambda,
                            static_cast<double>(m), used, classical_err, nan_v,
                            true});

            for (const windows::FreqWindowKind kind : kAllFreqKinds) {
                const windows::FrequencyWindow w(kind, cfg);
                const double err =
                    sweeps::freq_max_error_sweep(f, samples, w, Tone, spec.S)[0];
                const double bound =
                    freq_bound_for(kind, spec.N, lambda, T, f.l2_norm());
                rows.push_back({spec.name, windows::to_string(kind), spec.N,
                                lambda, static_cast<double>(m), used, err, bound,
                                err <= bound});
            }

            for (const windows::TimeWindowKind kind : kAllTimeKinds) {
                const windows::TimeWindow w(kind, m, cfg);
                const double err = sweeps::time_max_error(f, samples, w, spec.S);
                double bound = nan_v;
                bool pass = true;
                if (kind == windows::TimeWindowKind::SinhType) {
                    bound = bounds::sinh_error_bound(spec.N, lambda, m, f.l2_norm());
                    pass = err <= bound;
                } else if (lambda >= 1.0 / (static_cast<double>(m) - 1.0)) {
                    bound = bounds::ckb_error_bound(spec.N, lambda, m, f.l2_norm());
                    pass = err <= bound;
                }
                rows.push_back({spec.name, windows::to_string(kind), spec.N,
                                lambda, static_cast<double>(m), used, err, bound,
                                pass});
            }
        }
    }
    return rows;
}

std::vector<ResultRow> run_robustness_experiment(const ExperimentSpec& spec)
{
    require_lambdas(spec);
    require_ms(spec);
    // The deviation field R(noisy f) - R(f) is smooth at the scale 1/L,
    // so a moderate grid suffices for the bounded-noise maxima.
    const long Sg = std::min<long>(spec.S, 4001);
    const std::vector<double> grid = reconstruct::make_grid(-1.0, 1.0, Sg);
    constexpr int kDraws = 100;
    constexpr int kTrials = 10000;
    constexpr int kProbePoints = 10;

    std::vector<ResultRow> rows;
    for (const double lambda : spec.lambdas) {
        const windows::SamplingConfig cfg(spec.N, lambda);
        const long L = integral_rate(spec.N, lambda);
        for (const int m : spec.m_values) {
            const long T = L + m;
            const long used = 2 * T + 1;
            for (const windows::TimeWindowKind kind : kAllTimeKinds) {
                const windows::TimeWindow w(kind, m, cfg);
                double worst = 0.0;
                for (int d = 0; d < kDraws; ++d) {
                    // R is linear in the samples, so the deviation equals
                    // R applied to the noise alone.
                    sampling::SampleSet noise;
                    noise.rate = cfg.rate();
                    noise.k_min = -T;
                    noise.k_max = T;
                    noise.values.assign(static_cast<std::size_t>(used), 0.0);
                    const sampling::NoiseModel model{
                        sampling::NoiseKind::BoundedUniform, spec.epsilon, 0.0,
                        0, rng::hash64(spec.seed, static_cast<std::uint64_t>(d))};
                    for (long k = -T; k <= T; ++k) {
                        noise.at(k) = model.perturbation(k);
                    }
                    for (const double t : grid) {
                        const double dev =
                            std::abs(reconstruct::time_regularized(noise, w, t));
                        if (dev > worst) {
                            worst = dev;
                        }
                    }
                }
                double bound = nan_v;
                bool pass = true;
                if (spec.epsilon > 0.0) {
                    bound = kind == windows::TimeWindowKind::SinhType
                                ? bounds::robustness_bound_sinh(spec.epsilon,
                                                                lambda, m)
                                : bounds::robustness_bound_ckb(spec.epsilon,
                                                               lambda, m);
                    pass = worst <= bound;
                }
                rows.push_back({spec.name, windows::to_string(kind), spec.N,
                                lambda, static_cast<double>(m), used, worst,
                                bound, pass});
            }
        }

        // Stochastic robustness of the classical sum: empirical variance
        // of Delta_T(t) = sum X_k sinc(L pi t - k pi) over Gaussian
        // trials, probed at random points.
        const int m_max = *std::max_element(spec.m_values.begin(),
                                            spec.m_values.end());
        const long T = L + m_max;
        const long n_terms = 2 * T + 1;
        const rng::CounterRng probe{spec.seed};
        std::vector<std::vector<double>> kernels(
            kProbePoints, std::vector<double>(static_cast<std::size_t>(n_terms)));
        std::vector<double> probe_t(kProbePoints);
        for (int i = 0; i < kProbePoints; ++i) {
            probe_t[static_cast<std::size_t>(i)] =
                probe.symmetric(static_cast<std::uint64_t>(i));
            for (long k = -T; k <= T; ++k) {
                kernels[static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(k + T)] = specfun::sinc(
                           cfg.rate() * specfun::pi * probe_t[static_cast<std::size_t>(i)] -
                           static_cast<double>(k) * specfun::pi);
            }
        }
        std::vector<double> sum(kProbePoints, 0.0);
        std::vector<double> sum_sq(kProbePoints, 0.0);
        std::vector<double> draws(static_cast<std::size_t>(n_terms));
        for (int trial = 0; trial < kTrials; ++trial) {
            const rng::CounterRng trial_rng{
                rng::hash64(spec.seed, 0x67617573ULL + static_cast<std::uint64_t>(trial))};
            for (long k = -T; k <= T; ++k) {
                draws[static_cast<std::size_t>(k + T)] =
                    spec.rho * trial_rng.gaussian(static_cast<std::uint64_t>(k));
            }
            for (int i = 0; i < kProbePoints; ++i) {
                const std::vector<double>& c = kernels[static_cast<std::size_t>(i)];
                double delta = 0.0;
                for (std::size_t j = 0; j < c.size(); ++j) {
                    delta += draws[j] * c[j];
                }
                sum[static_cast<std::size_t>(i)] += delta;
                sum_sq[static_cast<std::size_t>(i)] += delta * delta;
            }
        }
        double max_var = 0.0;
        for (int i = 0; i < kProbePoints; ++i) {
            const double mean = sum[static_cast<std::size_t>(i)] / kTrials;
            const double var =
                (sum_sq[static_cast<std::size_t>(i)] - kTrials * mean * mean) /
                (kTrials - 1);
            max_var = std::max(max_var, var);
        }
        const double var_bound = 1.1 * spec.rho * spec.rho;
        rows.push_back({spec.name, "gaussian", spec.N, lambda,
                        static_cast<double>(m_max), n_terms, max_var, var_bound,
                        max_var <= var_bound});
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec)
{
    if (spec.name == "norm") {
        return run_norm_experiment(spec);
    }
    if (spec.name == "nonrobustness") {
        return run_nonrobustness_experiment(spec);
    }
    if (spec.name == "freq-decay") {
        return run_freq_decay_experiment(spec);
    }
    if (spec.name == "compare") {
        return run_compare_experiment(spec);
    }
    if (spec.name == "robustness") {
        return run_robustness_experiment(spec);
    }
    throw std::invalid_argument("unknown experiment: " + spec.name);
}

namespace {

std::string fmt(double v)
{
    char buf[40];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, char sep)
{
    const char* cols[] = {"experiment", "window", "N",         "lambda",
                          "param",      "samples_used", "max_error", "bound",
                          "pass"};
    for (std::size_t i = 0; i < 9; ++i) {
        out << cols[i] << (i + 1 < 9 ? std::string(1, sep) : std::string("\n"));
    }
    for (const ResultRow& r : rows) {
        out << r.experiment << sep << r.window << sep << r.N << sep
            << fmt(r.lambda) << sep << fmt(r.param) << sep << r.samples_used
            << sep << fmt(r.max_error) << sep << fmt(r.bound) << sep
            << (r.pass ? "true" : "false") << '\n';
    }
}

bool all_pass(const std::vector<ResultRow>& rows)
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const ResultRow& r) { return r.pass; });
}

namespace {

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

double fit_loglog_slope(const std::vector<double>& gaps,
                        const std::vector<double>& errors)
{
    if (gaps.size() != errors.size() || gaps.empty()) {
        throw std::invalid_argument("fit_loglog_slope: bad input lengths");
    }
    const double max_gap = *std::max_element(gaps.begin(), gaps.end());
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] > max_gap / 10.0 && errors[i] > 0.0 &&
            std::isfinite(errors[i])) {
            xs.push_back(std::log(gaps[i]));
            ys.push_back(std::log(errors[i]));
        }
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("fit_loglog_slope: fewer than two valid rows");
    }
    return lsq_slope(xs, ys);
}

double fit_semilog_slope(const std::vector<double>& ms,
                         const std::vector<double>& errors)
{
    if (ms.size() != errors.size() || ms.size() < 2) {
        throw std::invalid_argument("fit_semilog_slope: bad input lengths");
    }
    // Restrict to the largest decade of valid rows — here the decade of
    // smallest errors, which is the asymptotic regime of the decay.
    double min_err = std::numeric_limits<double>::infinity();
    for (const double e : errors) {
        if (e > 0.0 && std::isfinite(e)) {
            min_err = std::min(min_err, e);
        }
    }
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (errors[i] > 0.0 && std::isfinite(errors[i]) &&
            errors[i] <= 10.0 * min_err) {
            xs.push_back(ms[i]);
            ys.push_back(std::log(errors[i]));
        }
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("fit_semilog_slope: fewer than two valid rows");
    }
    return lsq_slope(xs, ys);
}

} // namespace shannon::experiments
