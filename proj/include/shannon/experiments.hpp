#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Experiment runners reproducing the paper's figures as machine-readable
// tables, with every measured error checked against its bound.

namespace shannon::experiments {

struct ExperimentSpec {
    std::string name;  // norm | nonrobustness | freq-decay | compare | robustness
    int N = 128;
    std::vector<double> lambdas;
    std::vector<int> T_exponents;  // T = 2^c sweeps
    std::vector<int> m_values;     // localized truncation sweeps
    double epsilon = 1e-3;
    double rho = 1e-3;
    long S = 100000;  // evaluation grid size on [-1, 1]
    std::uint64_t seed = 0;
};

struct ResultRow {
    std::string experiment;
    std::string window;
    int N;
    double lambda;
    double param;          // T or m, depending on the experiment
    long samples_used;
    double max_error;
    double bound;          // NaN when no bound applies to the row
    bool pass;
};

std::vector<ResultRow> run_norm_experiment(const ExperimentSpec& spec);
std::vector<ResultRow> run_nonrobustness_experiment(const ExperimentSpec& spec);
std::vector<ResultRow> run_freq_decay_experiment(const ExperimentSpec& spec);
std::vector<ResultRow> run_compare_experiment(const ExperimentSpec& spec);
std::vector<ResultRow> run_robustness_experiment(const ExperimentSpec& spec);

// Dispatch by spec.name; throws std::invalid_argument for unknown names.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

// Header "experiment,window,N,lambda,param,samples_used,max_error,bound,pass";
// floating values in shortest round-trip decimal form.
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows,
                char sep = ',');

bool all_pass(const std::vector<ResultRow>& rows);

// Least-squares slope of log(error) against log(gap), restricted to the
// largest decade of gaps (gap > max_gap/10).
double fit_loglog_slope(const std::vector<double>& gaps,
                        const std::vector<double>& errors);

// Least-squares slope of log(error) against m, restricted to the
// largest decade of errors (error <= 10 * min_error).
double fit_semilog_slope(const std::vector<double>& ms,
                         const std::vector<double>& errors);

} // namespace shannon::experiments
