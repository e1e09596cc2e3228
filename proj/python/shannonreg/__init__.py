"""Bandlimited reconstruction from equispaced samples.

Thin Python facade over the C++ core: special functions, window
functions, the three reconstruction operators, closed-form error bounds,
and the experiment runners.
"""

from ._shannonreg import (
    BandlimitedTestFunction,
    FreqWindowKind,
    FrequencyWindow,
    SampleSet,
    SamplingConfig,
    TestFunctionKind,
    TimeWindow,
    TimeWindowKind,
    bessel_i0,
    ckb_bracket,
    ckb_error_bound,
    freq_cub_error_bound,
    freq_lin_error_bound,
    freq_regularized_sum,
    rows_to_csv,
    run_experiment,
    shannon_norm_bracket,
    shannon_norm_numeric,
    shannon_partial_sum,
    sinc,
    sine_integral,
    sinh_error_bound,
    struve_l0,
    take_samples,
    time_regularized,
)

__all__ = [
    "BandlimitedTestFunction",
    "FreqWindowKind",
    "FrequencyWindow",
    "SampleSet",
    "SamplingConfig",
    "TestFunctionKind",
    "TimeWindow",
    "TimeWindowKind",
    "bessel_i0",
    "ckb_bracket",
    "ckb_error_bound",
    "freq_cub_error_bound",
    "freq_lin_error_bound",
    "freq_regularized_sum",
    "rows_to_csv",
    "run_experiment",
    "shannon_norm_bracket",
    "shannon_norm_numeric",
    "shannon_partial_sum",
    "sinc",
    "sine_integral",
    "sinh_error_bound",
    "struve_l0",
    "take_samples",
    "time_regularized",
]
