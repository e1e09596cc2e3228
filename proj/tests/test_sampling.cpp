#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shannon/rng.hpp"
#include "shannon/sampling.hpp"
#include "shannon/specfun.hpp"

#include <cmath>
#include <sstream>
#include <string>

using namespace shannon::sampling;
using shannon::rng::CounterRng;
using shannon::rng::hash64;
using shannon::specfun::pi;

TEST_CASE("counter rng determinism and ranges")
{
    CHECK(hash64(1, 2) == hash64(1, 2));
    CHECK(hash64(1, 2) != hash64(1, 3));
    CHECK(hash64(1, 2) != hash64(2, 2));
    const CounterRng rng{123};
    for (std::uint64_t c = 0; c < 10000; ++c) {
        const double u = rng.uniform(c);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double s = rng.symmetric(c);
        CHECK(s >= -1.0);
        CHECK(s < 1.0);
        CHECK(rng.uniform(c) == u);  // pure function of (seed, counter)
    }
}

TEST_CASE("counter rng gaussian moments")
{
    const CounterRng rng{7};
    const std::uint64_t n = 200000;
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::uint64_t c = 0; c < n; ++c) {
        const double g = rng.gaussian(c);
        CHECK(std::isfinite(g));
        sum += g;
        sumsq += g * g;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_CASE("unit sinc test function values")
{
    const BandlimitedTestFunction f{TestFunctionKind::UnitSinc, 16};
    CHECK(f(0.0) == 4.0);
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(f(static_cast<double>(k) / 16.0)) < 1e-14);
    }
}

TEST_CASE("shifted pair test function values")
{
    const BandlimitedTestFunction f{TestFunctionKind::ShiftedPair, 16};
    CHECK(f(0.0) == doctest::Approx(std::sqrt(12.8)).epsilon(1e-14));
    CHECK(f(1.0) == doctest::Approx(0.5 * std::sqrt(12.8)).epsilon(1e-14));
}

TEST_CASE("sampling at rate 2N gives the half-integer sinc pattern")
{
    const BandlimitedTestFunction f{TestFunctionKind::UnitSinc, 16};
    const SampleSet s = take_samples(f, 32.0, -2, 2);
    CHECK(s.size() == 5);
    CHECK(s.covers(-2, 2));
    CHECK_FALSE(s.covers(-3, 2));
    const double root = 4.0;  // sqrt(16)
    CHECK(std::abs(s.at(-2)) < 1e-14);
    CHECK(s.at(-1) == doctest::Approx(2.0 * root / pi).epsilon(1e-14));
    CHECK(s.at(0) == root);
    CHECK(s.at(1) == doctest::Approx(2.0 * root / pi).epsilon(1e-14));
    CHECK(std::abs(s.at(2)) < 1e-14);
    CHECK_THROWS_AS(take_samples(f, 0.0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(take_samples(f, 32.0, 1, -1), std::invalid_argument);
}

TEST_CASE("discrete Parseval identity for the unit-norm signals")
{
    // (1/L) sum_k |f(k/L)|^2 = ||f||^2 = 1 for L >= N.
    const long K = 1000000;
    {
        const BandlimitedTestFunction f{TestFunctionKind::UnitSinc, 16};
        const SampleSet s = take_samples(f, 24.0, -K, K);
        double sum = 0.0;
        for (long k = K; k >= 1; --k) {
            sum += s.at(k) * s.at(k) + s.at(-k) * s.at(-k);
        }
        sum += s.at(0) * s.at(0);
        CHECK(sum / 24.0 == doctest::Approx(1.0).epsilon(1e-5));
    }
    {
        const BandlimitedTestFunction f{TestFunctionKind::ShiftedPair, 16};
        const SampleSet s = take_samples(f, 32.0, -K, K);
        double sum = 0.0;
        for (long k = K; k >= 1; --k) {
            sum += s.at(k) * s.at(k) + s.at(-k) * s.at(-k);
        }
        sum += s.at(0) * s.at(0);
        CHECK(sum / 32.0 == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("worst-case sign noise pattern")
{
    NoiseModel n{NoiseKind::WorstCaseSign, 1e-3, 0.0, 4, 0};
    // eps_k = eps (-1)^{k+1} sign(2k-1)
    CHECK(n.perturbation(0) == 1e-3);
    CHECK(n.perturbation(1) == 1e-3);
    CHECK(n.perturbation(-1) == -1e-3);
    CHECK(n.perturbation(2) == -1e-3);
    CHECK(n.perturbation(-2) == 1e-3);
    CHECK(n.perturbation(5) == 0.0);
    CHECK(n.perturbation(-5) == 0.0);
}

TEST_CASE("apply_noise identity at zero amplitude and range check")
{
    const BandlimitedTestFunction f{TestFunctionKind::UnitSinc, 16};
    const SampleSet s = take_samples(f, 32.0, -8, 8);
    const SampleSet noisy =
        apply_noise(s, NoiseModel{NoiseKind::WorstCaseSign, 0.0, 0.0, 8, 0});
    for (long k = -8; k <= 8; ++k) {
        CHECK(noisy.at(k) == s.at(k));
    }
    CHECK_THROWS_AS(
        apply_noise(s, NoiseModel{NoiseKind::WorstCaseSign, 1e-3, 0.0, 9, 0}),
        std::out_of_range);
}

TEST_CASE("bounded uniform noise stays within amplitude")
{
    NoiseModel n{NoiseKind::BoundedUniform, 1e-3, 0.0, 0, 99};
    for (long k = -5000; k <= 5000; ++k) {
        CHECK(std::abs(n.perturbation(k)) <= 1e-3);
    }
}

TEST_CASE("stochastic noise streams are reproducible and seed-dependent")
{
    NoiseModel a{NoiseKind::ZeroMeanGaussian, 0.0, 1e-3, 0, 5};
    NoiseModel b{NoiseKind::ZeroMeanGaussian, 0.0, 1e-3, 0, 5};
    NoiseModel c{NoiseKind::ZeroMeanGaussian, 0.0, 1e-3, 0, 6};
    bool any_diff = false;
    for (long k = -100; k <= 100; ++k) {
        CHECK(a.perturbation(k) == b.perturbation(k));
        any_diff = any_diff || (a.perturbation(k) != c.perturbation(k));
    }
    CHECK(any_diff);
}

TEST_CASE("sample serialization round trip is bit-exact")
{
    const BandlimitedTestFunction f{TestFunctionKind::ShiftedPair, 16};
    const SampleSet s = take_samples(f, 24.0, -37, 51);
    std::stringstream buf;
    write_samples(buf, s);
    const SampleSet r = read_samples(buf);
    CHECK(r.rate == s.rate);
    CHECK(r.k_min == s.k_min);
    CHECK(r.k_max == s.k_max);
    for (long k = s.k_min; k <= s.k_max; ++k) {
        CHECK(r.at(k) == s.at(k));
    }
    std::stringstream bad("no header\n0 1.0\n");
    CHECK_THROWS_AS(read_samples(bad), std::runtime_error);
}

TEST_CASE("kind names")
{
    CHECK(std::string(to_string(TestFunctionKind::UnitSinc)) == "unit_sinc");
    CHECK(std::string(to_string(TestFunctionKind::ShiftedPair)) ==
          "shifted_pair");
}
