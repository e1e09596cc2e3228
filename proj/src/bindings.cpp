#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shannon/bounds.hpp"
#include "shannon/experiments.hpp"
#include "shannon/reconstruct.hpp"
#include "shannon/sampling.hpp"
#include "shannon/specfun.hpp"
#include "shannon/windows.hpp"

#include <sstream>

namespace py = pybind11;
using namespace shannon;

namespace {

py::dict row_to_dict(const experiments::ResultRow& r)
{
    py::dict d;
    d["experiment"] = r.experiment;
    d["window"] = r.window;
    d["N"] = r.N;
    d["lambda"] = r.lambda;
    d["param"] = r.param;
    d["samples_used"] = r.samples_used;
    d["max_error"] = r.max_error;
    d["bound"] = r.bound;
    d["pass"] = r.pass;
    return d;
}

} // namespace

PYBIND11_MODULE(_shannonreg, mod)
{
    mod.doc() = "Bandlimited reconstruction from equispaced samples";

    mod.def("sinc", &specfun::sinc, py::arg("x"));
    mod.def("bessel_i0",
            [](double x) { return specfun::bessel_i0(x); }, py::arg("x"));
    mod.def("struve_l0",
            [](double x) { return specfun::struve_l0(x); }, py::arg("x"));
    mod.def("sine_integral", &specfun::sine_integral, py::arg("x"));
    mod.def("ckb_bracket", &specfun::ckb_bracket, py::arg("beta"));

    py::class_<windows::SamplingConfig>(mod, "SamplingConfig")
        .def(py::init<int, double>(), py::arg("bandwidth"),
             py::arg("oversampling"))
        .def_readonly("bandwidth", &windows::SamplingConfig::bandwidth)
        .def_readonly("oversampling", &windows::SamplingConfig::oversampling)
        .def_property_readonly("rate", &windows::SamplingConfig::rate);

    py::enum_<windows::TimeWindowKind>(mod, "TimeWindowKind")
        .value("SINH", windows::TimeWindowKind::SinhType)
        .value("CKB", windows::TimeWindowKind::ContinuousKaiserBessel);

    py::class_<windows::TimeWindow>(mod, "TimeWindow")
        .def(py::init<windows::TimeWindowKind, int, windows::SamplingConfig>(),
             py::arg("kind"), py::arg("m"), py::arg("config"))
        .def("__call__", &windows::TimeWindow::operator(), py::arg("t"))
        .def("fourier", &windows::TimeWindow::fourier, py::arg("v"))
        .def_property_readonly("beta", &windows::TimeWindow::beta)
        .def_property_readonly("support_radius",
                               &windows::TimeWindow::support_radius);

    py::enum_<windows::FreqWindowKind>(mod, "FreqWindowKind")
        .value("LINEAR", windows::FreqWindowKind::Linear)
        .value("CUBIC", windows::FreqWindowKind::Cubic)
        .value("RAISED_COSINE", windows::FreqWindowKind::RaisedCosine)
        .value("CONV_BSPLINE2", windows::FreqWindowKind::ConvBSpline2);

    py::class_<windows::FrequencyWindow>(mod, "FrequencyWindow")
        .def(py::init<windows::FreqWindowKind, windows::SamplingConfig>(),
             py::arg("kind"), py::arg("config"))
        .def("hat", &windows::FrequencyWindow::hat, py::arg("v"))
        .def("time", &windows::FrequencyWindow::time, py::arg("t"));

    py::enum_<sampling::TestFunctionKind>(mod, "TestFunctionKind")
        .value("UNIT_SINC", sampling::TestFunctionKind::UnitSinc)
        .value("SHIFTED_PAIR", sampling::TestFunctionKind::ShiftedPair);

    py::class_<sampling::BandlimitedTestFunction>(mod,
                                                  "BandlimitedTestFunction")
        .def(py::init([](sampling::TestFunctionKind kind, int N) {
                 return sampling::BandlimitedTestFunction{kind, N};
             }),
             py::arg("kind"), py::arg("bandwidth"))
        .def("__call__", &sampling::BandlimitedTestFunction::operator(),
             py::arg("t"));

    py::class_<sampling::SampleSet>(mod, "SampleSet")
        .def_readonly("rate", &sampling::SampleSet::rate)
        .def_readonly("k_min", &sampling::SampleSet::k_min)
        .def_readonly("k_max", &sampling::SampleSet::k_max)
        .def_readonly("values", &sampling::SampleSet::values)
        .def("at",
             [](const sampling::SampleSet& s, long k) { return s.at(k); },
             py::arg("k"));

    mod.def("take_samples", &sampling::take_samples, py::arg("f"),
            py::arg("rate"), py::arg("k_min"), py::arg("k_max"));

    mod.def("shannon_partial_sum", &reconstruct::shannon_partial_sum,
            py::arg("samples"), py::arg("T"), py::arg("t"));
    mod.def("freq_regularized_sum", &reconstruct::freq_regularized_sum,
            py::arg("samples"), py::arg("window"), py::arg("T"), py::arg("t"));
    mod.def(
        "time_regularized",
        [](const sampling::SampleSet& s, const windows::TimeWindow& w,
           double t) { return reconstruct::time_regularized(s, w, t); },
        py::arg("samples"), py::arg("window"), py::arg("t"));

    mod.def("shannon_norm_numeric", &bounds::shannon_norm_numeric,
            py::arg("T"), py::arg("rate"), py::arg("refinement") = 10000);
    mod.def("shannon_norm_bracket", [](long T) {
        const bounds::NormBracket b = bounds::shannon_norm_bracket(T);
        return py::make_tuple(b.lower, b.upper);
    });
    mod.def("sinh_error_bound", &bounds::sinh_error_bound, py::arg("N"),
            py::arg("lam"), py::arg("m"), py::arg("f_norm") = 1.0);
    mod.def("ckb_error_bound", &bounds::ckb_error_bound, py::arg("N"),
            py::arg("lam"), py::arg("m"), py::arg("f_norm") = 1.0);
    mod.def("freq_lin_error_bound", &bounds::freq_lin_error_bound,
            py::arg("N"), py::arg("lam"), py::arg("T"), py::arg("f_norm") = 1.0);
    mod.def("freq_cub_error_bound", &bounds::freq_cub_error_bound,
            py::arg("N"), py::arg("lam"), py::arg("T"), py::arg("f_norm") = 1.0);

    mod.def(
        "run_experiment",
        [](const std::string& name, int N, std::vector<double> lambdas,
           std::vector<int> T_exponents, std::vector<int> m_values,
           double epsilon, double rho, long S, std::uint64_t seed) {
            experiments::ExperimentSpec spec;
            spec.name = name;
            spec.N = N;
            spec.lambdas = std::move(lambdas);
            spec.T_exponents = std::move(T_exponents);
            spec.m_values = std::move(m_values);
            spec.epsilon = epsilon;
            spec.rho = rho;
            spec.S = S;
            spec.seed = seed;
            const auto rows = experiments::run_experiment(spec);
            py::list out;
            for (const auto& r : rows) {
                out.append(row_to_dict(r));
            }
            return out;
        },
        py::arg("name"), py::arg("N") = 128,
        py::arg("lambdas") = std::vector<double>{},
        py::arg("T_exponents") = std::vector<int>{},
        py::arg("m_values") = std::vector<int>{}, py::arg("epsilon") = 1e-3,
        py::arg("rho") = 1e-3, py::arg("S") = 100000, py::arg("seed") = 0);

    mod.def("rows_to_csv", [](const py::list& rows, char sep) {
        std::vector<experiments::ResultRow> rs;
        for (const auto& item : rows) {
            const py::dict d = item.cast<py::dict>();
            rs.push_back({d["experiment"].cast<std::string>(),
                          d["window"].cast<std::string>(), d["N"].cast<int>(),
                          d["lambda"].cast<double>(), d["param"].cast<double>(),
                          d["samples_used"].cast<long>(),
                          d["max_error"].cast<double>(),
                          d["bound"].cast<double>(), d["pass"].cast<bool>()});
        }
        std::ostringstream out;
        experiments::write_rows(out, rs, sep);
        return out.str();
    }, py::arg("rows"), py::arg("sep") = ',');
}
