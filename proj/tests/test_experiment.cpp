#include <doctest.h>

#include <cmath>

#include "hpk/errors.hpp"
#include "hpk/experiment.hpp"
#include "hpk/json_io.hpp"

using namespace hpk;

namespace {

ExperimentConfig smoke_config() {
    ExperimentConfig cfg;
    cfg.seed = 42;
    cfg.trials = 60;
    cfg.deg_h = 3;
    cfg.deg_g = 1;
    return cfg;
}

}  // namespace

TEST_CASE("trial polynomials are a pure function of (config, index)") {
    const ExperimentConfig cfg = smoke_config();
    const HarmonicFn a = experiment_trial_fn(cfg, 7);
    const HarmonicFn b = experiment_trial_fn(cfg, 7);
    CHECK(max_coeff_dist(a.h, b.h) == 0.0);
    CHECK(max_coeff_dist(a.g, b.g) == 0.0);
    CHECK(experiment_trial_alpha(cfg, 7) == experiment_trial_alpha(cfg, 7));

    // Different indices draw from disjoint substreams.
    const HarmonicFn c = experiment_trial_fn(cfg, 8);
    CHECK(max_coeff_dist(a.h, c.h) > 0.0);

    ExperimentConfig other = cfg;
    other.seed = 43;
    const HarmonicFn d = experiment_trial_fn(other, 7);
    CHECK(max_coeff_dist(a.h, d.h) > 0.0);
}

TEST_CASE("trial draws respect the degree and box constraints") {
    const ExperimentConfig cfg = smoke_config();
    for (int trial = 0; trial < 50; ++trial) {
        const HarmonicFn f = experiment_trial_fn(cfg, trial);
        CHECK(f.h.degree() == cfg.deg_h);
        CHECK(f.g.degree() == cfg.deg_g);
        CHECK(std::abs(f.h.coeff(cfg.deg_h)) >= 0.1 * cfg.coeff_box);
        CHECK(std::abs(f.g.coeff(cfg.deg_g)) >= 0.1 * cfg.coeff_box);
        CHECK(f.h.max_abs() <= cfg.coeff_box * std::sqrt(2.0));

        const double alpha = experiment_trial_alpha(cfg, trial);
        CHECK(std::abs(alpha) >= 0.25);
        CHECK(std::abs(alpha) <= 2.0);
    }
}

TEST_CASE("summaries are identical across thread counts and reruns") {
    const ExperimentConfig cfg = smoke_config();
    const ExperimentSummary serial = run_experiment(cfg, 1);
    const ExperimentSummary wide = run_experiment(cfg, 4);
    const ExperimentSummary again = run_experiment(cfg, 4);

    // wall_time is excluded from the serialization, so Json equality is
    // exactly the determinism contract the CLI exposes.
    CHECK(to_json(serial) == to_json(wide));
    CHECK(to_json(wide) == to_json(again));
    CHECK(serial.skip_reasons == wide.skip_reasons);
}

TEST_CASE("both zero-count bounds hold on the smoke corpus") {
    const ExperimentConfig cfg = smoke_config();
    const ExperimentSummary s = run_experiment(cfg, 0);

    CHECK(s.bound_violations == 0);
    CHECK(s.trials_run == cfg.trials - s.degenerate_skips);
    CHECK(s.degenerate_skips == 0);
    CHECK(static_cast<int>(s.skip_reasons.size()) == s.degenerate_skips);
    CHECK(s.max_zero_count <= 2 * cfg.deg_h * cfg.deg_h);
    CHECK(s.mean_zero_count <= static_cast<double>(s.max_zero_count));
    // The product has analytic degree 2*deg_h, so at least that many zeros.
    CHECK(s.max_zero_count >= 2 * cfg.deg_h);
    CHECK(s.wall_time > 0.0);
}

TEST_CASE("config validation rejects unusable parameter combinations") {
    ExperimentConfig cfg = smoke_config();

    cfg.trials = 0;
    CHECK_THROWS_AS(run_experiment(cfg), InvalidInput);
    cfg = smoke_config();

    cfg.deg_h = 0;
    CHECK_THROWS_AS(run_experiment(cfg), InvalidInput);
    cfg = smoke_config();

    cfg.deg_g = cfg.deg_h;
    CHECK_THROWS_AS(run_experiment(cfg), DegenerateDegrees);
    cfg = smoke_config();

    cfg.deg_g = -1;
    CHECK_THROWS_AS(run_experiment(cfg), InvalidInput);
    cfg = smoke_config();

    cfg.coeff_box = 0.0;
    CHECK_THROWS_AS(run_experiment(cfg), InvalidInput);
    cfg = smoke_config();

    cfg.tol = -1e-9;
    CHECK_THROWS_AS(run_experiment(cfg), InvalidInput);

    // The trial helpers validate the same way.
    cfg = smoke_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(experiment_trial_fn(cfg, 0), InvalidInput);
    CHECK_THROWS_AS(experiment_trial_alpha(cfg, 0), InvalidInput);
}
