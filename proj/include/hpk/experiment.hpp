#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpk/zeros.hpp"

namespace hpk {

struct ExperimentConfig {
    std::uint64_t seed = 0;
    int trials = 0;          // >= 1
    int deg_h = 0;           // >= 1
    int deg_g = 0;           // >= 0, < deg_h
    double coeff_box = 1.0;  // coefficients drawn from [-box, box]^2
    double tol = 1e-9;
};

struct ExperimentSummary {
    int trials_run = 0;          // trials - degenerate_skips
    int bound_violations = 0;    // trials where any report exceeds its bound
    long max_zero_count = 0;     // max product count_with_multiplicity
    double mean_zero_count = 0;  // mean of the same over completed trials
    int degenerate_skips = 0;
    double wall_time = 0;                  // seconds; excluded from stdout JSON
    std::vector<std::string> skip_reasons;  // one entry per skip, trial-tagged
};

// Runs `trials` independent product_zeros checks on random harmonic
// polynomials. Each trial draws its coefficients from an RNG substream
// keyed by (seed, trial index), so the result is bit-identical for a fixed
// seed regardless of how many threads execute it. `threads` <= 0 means use
// the HPK_THREADS environment variable, falling back to the hardware count.
ExperimentSummary run_experiment(const ExperimentConfig& cfg, int threads = 0);

// The trial polynomial the experiment would test, exposed so determinism is
// testable from outside: uniform coefficients in the box, leading
// coefficients resampled until their magnitude is at least 0.1.
HarmonicFn experiment_trial_fn(const ExperimentConfig& cfg, int trial);

// The trial's cofactor scale, drawn from the same substream.
double experiment_trial_alpha(const ExperimentConfig& cfg, int trial);

}  // namespace hpk
