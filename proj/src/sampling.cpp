#include "shannon/sampling.hpp"

#include "shannon/rng.hpp"
#include "shannon/specfun.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace shannon::sampling {

using specfun::pi;
using specfun::sinc;

double BandlimitedTestFunction::operator()(double t) const
{
    const double N = bandwidth;
    switch (kind) {
    case TestFunctionKind::UnitSinc:
        return std::sqrt(N) * sinc(N * pi * t);
    case TestFunctionKind::ShiftedPair:
        return std::sqrt(0.8 * N) *
               (sinc(N * pi * t) + 0.5 * sinc(N * pi * (t - 1.0)));
    }
    return 0.0;
}

SampleSet take_samples(const BandlimitedTestFunction& f, double L, long k_min,
                       long k_max)
{
    if (!(L > 0.0)) {
        throw std::invalid_argument("take_samples: rate must be positive");
    }
    if (k_min > k_max) {
        throw std::invalid_argument("take_samples: k_min > k_max");
    }
    SampleSet s;
    s.rate = L;
    s.k_min = k_min;
    s.k_max = k_max;
    s.values.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (long k = k_min; k <= k_max; ++k) {
        s.values.push_back(f(static_cast<double>(k) / L));
    }
    return s;
}

double NoiseModel::perturbation(long k) const
{
    switch (kind) {
    case NoiseKind::WorstCaseSign: {
        if (std::labs(k) > T) {
            return 0.0;
        }
        const double alt = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        const double sgn = (2 * k - 1 > 0) ? 1.0 : -1.0;
        return epsilon * alt * sgn;
    }
    case NoiseKind::BoundedUniform:
        return epsilon * rng::CounterRng{seed}.symmetric(static_cast<std::uint64_t>(k));
    case NoiseKind::ZeroMeanGaussian:
        return rho * rng::CounterRng{seed}.gaussian(static_cast<std::uint64_t>(k));
    }
    return 0.0;
}

SampleSet apply_noise(const SampleSet& s, const NoiseModel& n)
{
    if (n.kind == NoiseKind::WorstCaseSign && !s.covers(-n.T, n.T)) {
        throw std::out_of_range("apply_noise: sample range does not cover [-T, T]");
    }
    SampleSet out = s;
    for (long k = out.k_min; k <= out.k_max; ++k) {
        out.at(k) += n.perturbation(k);
    }
    return out;
}

void write_samples(std::ostream& out, const SampleSet& s)
{
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "# L=" << s.rate << '\n';
    for (long k = s.k_min; k <= s.k_max; ++k) {
        out << k << ' ' << s.at(k) << '\n';
    }
}

SampleSet read_samples(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header) || header.rfind("# L=", 0) != 0) {
        throw std::runtime_error("read_samples: missing '# L=' header");
    }
    SampleSet s;
    s.rate = std::stod(header.substr(4));
    bool first = true;
    long k = 0;
    double v = 0.0;
    while (in >> k >> v) {
        if (first) {
            s.k_min = k;
            first = false;
        } else if (k != s.k_max + 1) {
            throw std::runtime_error("read_samples: non-contiguous indices");
        }
        s.k_max = k;
        s.values.push_back(v);
    }
    if (first) {
        throw std::runtime_error("read_samples: no samples");
    }
    return s;
}

const char* to_string(TestFunctionKind kind)
{
    switch (kind) {
    case TestFunctionKind::UnitSinc: return "unit_sinc";
    case TestFunctionKind::ShiftedPair: return "shifted_pair";
    }
    return "?";
}

} // namespace shannon::sampling
