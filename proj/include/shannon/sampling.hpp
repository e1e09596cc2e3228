#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

// Bandlimited test signals, equispaced samplers, and noise models.

namespace shannon::sampling {

enum class TestFunctionKind {
    UnitSinc,     // f(t) = sqrt(N) sinc(N pi t)
    ShiftedPair,  // f(t) = sqrt(4N/5) [sinc(N pi t) + sinc(N pi (t-1))/2]
};

// Unit-L2-norm functions bandlimited to [-N/2, N/2].
struct BandlimitedTestFunction {
    TestFunctionKind kind;
    int bandwidth;  // N

    double operator()(double t) const;

    // Both test functions are normalized to ||f||_{L2} = 1.
    double l2_norm() const { return 1.0; }
};

// Equispaced samples f(k/L) for k in [k_min, k_max].
struct SampleSet {
    double rate;  // L
    long k_min = 0;
    long k_max = -1;
    std::vector<double> values;

    long size() const { return k_max - k_min + 1; }
    bool covers(long a, long b) const { return k_min <= a && b <= k_max; }
    double at(long k) const { return values[static_cast<std::size_t>(k - k_min)]; }
    double& at(long k) { return values[static_cast<std::size_t>(k - k_min)]; }
};

SampleSet take_samples(const BandlimitedTestFunction& f, double L, long k_min,
                       long k_max);

enum class NoiseKind {
    WorstCaseSign,    // eps_k = eps (-1)^{k+1} sign(2k-1) for |k| <= T
    BoundedUniform,   // i.i.d. uniform on [-eps, eps]
    ZeroMeanGaussian, // i.i.d. normal(0, rho^2)
};

struct NoiseModel {
    NoiseKind kind;
    double epsilon = 0;      // amplitude bound (WorstCaseSign, BoundedUniform)
    double rho = 0;          // standard deviation (ZeroMeanGaussian)
    long T = 0;              // affected index radius (WorstCaseSign only)
    std::uint64_t seed = 0;  // deterministic stream id

    // The additive perturbation of sample k.
    double perturbation(long k) const;
};

// Returns a fresh SampleSet with the noise added; the input is unchanged.
SampleSet apply_noise(const SampleSet& s, const NoiseModel& n);

// Two-column text format (index, value) with a "# L=<rate>" header.
void write_samples(std::ostream& out, const SampleSet& s);
SampleSet read_samples(std::istream& in);

const char* to_string(TestFunctionKind kind);

} // namespace shannon::sampling
