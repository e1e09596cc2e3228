// CLI experiment harness: reproduces the paper-style sweeps as CSV/TSV
// tables and exits nonzero if any measured error violates its bound.

#include "shannon/experiments.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

template <class T>
std::vector<T> parse_csv_list(const std::string& text)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        if constexpr (std::is_same_v<T, double>) {
            out.push_back(std::stod(item));
        } else {
            out.push_back(static_cast<T>(std::stol(item)));
        }
    }
    return out;
}

std::vector<int> iota_range(int lo, int hi)
{
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) {
        out.push_back(i);
    }
    return out;
}

void fill_defaults(shannon::experiments::ExperimentSpec& spec, bool n_given)
{
    if (spec.name == "norm") {
        if (spec.lambdas.empty()) spec.lambdas = {1.0};
        if (spec.T_exponents.empty()) spec.T_exponents = iota_range(0, 12);
    } else if (spec.name == "nonrobustness") {
        if (spec.lambdas.empty()) spec.lambdas = {0.0, 0.5, 1.0, 2.0};
        if (spec.T_exponents.empty()) spec.T_exponents = iota_range(0, 12);
    } else if (spec.name == "freq-decay") {
        if (spec.lambdas.empty()) spec.lambdas = {0.5, 1.0, 2.0};
        if (spec.T_exponents.empty()) spec.T_exponents = iota_range(0, 15);
    } else if (spec.name == "compare" || spec.name == "robustness") {
        if (!n_given) spec.N = 256;
        if (spec.lambdas.empty()) spec.lambdas = {0.5, 1.0, 2.0};
        if (spec.m_values.empty()) spec.m_values = iota_range(2, 10);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bandlimited reconstruction experiment harness"};
    shannon::experiments::ExperimentSpec spec;
    std::string lambda_csv, m_csv, t_exp_csv, out_path, format = "csv";

    app.add_option("experiment", spec.name,
                   "norm | nonrobustness | freq-decay | compare | robustness")
        ->required();
    CLI::Option* n_opt = app.add_option("--N", spec.N, "bandwidth parameter");
    app.add_option("--lambda", lambda_csv, "oversampling values, comma separated");
    app.add_option("--m", m_csv, "truncation values, comma separated");
    app.add_option("--T-exp", t_exp_csv, "exponents c for T = 2^c, comma separated");
    app.add_option("--eps", spec.epsilon, "bounded noise amplitude");
    app.add_option("--rho", spec.rho, "Gaussian noise standard deviation");
    app.add_option("--S", spec.S, "evaluation grid size on [-1, 1]");
    app.add_option("--seed", spec.seed, "RNG seed");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv (default) or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        spec.lambdas = parse_csv_list<double>(lambda_csv);
        spec.m_values = parse_csv_list<int>(m_csv);
        spec.T_exponents = parse_csv_list<int>(t_exp_csv);
        fill_defaults(spec, n_opt->count() > 0);

        const std::vector<shannon::experiments::ResultRow> rows =
            shannon::experiments::run_experiment(spec);
        const char sep = format == "tsv" ? '\t' : ',';
        if (out_path.empty()) {
            shannon::experiments::write_rows(std::cout, rows, sep);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open output path: " << out_path << '\n';
                return 2;
            }
            shannon::experiments::write_rows(out, rows, sep);
        }
        return shannon::experiments::all_pass(rows) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
