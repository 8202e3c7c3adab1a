#include "hpk/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

// splitmix64; used to spread (seed, trial) into independent engine seeds so
// trial streams never depend on which thread runs them.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_engine(std::uint64_t seed, int trial) {
    const std::uint64_t counter =
        seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1));
    return std::mt19937_64(mix(counter));
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw InvalidInput("experiment needs trials >= 1");
    if (cfg.deg_h < 1) throw InvalidInput("experiment needs deg_h >= 1");
    if (cfg.deg_g < 0) throw InvalidInput("experiment needs deg_g >= 0");
    if (cfg.deg_g >= cfg.deg_h) {
        throw DegenerateDegrees("experiment requires deg_g < deg_h");
    }
    if (!(cfg.coeff_box > 0.0) || !std::isfinite(cfg.coeff_box)) {
        throw InvalidInput("coeff_box must be positive");
    }
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
        throw InvalidInput("tol must be positive");
    }
}

struct TrialDraw {
    HarmonicFn fn;
    double alpha;
};

// One trial's full random draw. Coefficients are uniform in the box;
// leading coefficients are redrawn until they clear 0.1 in magnitude (with
// a deterministic fallback so no seed can loop), keeping the search radius
// and the n^2 bound meaningful.
TrialDraw draw_trial(const ExperimentConfig& cfg, int trial) {
    std::mt19937_64 eng = trial_engine(cfg.seed, trial);
    std::uniform_real_distribution<double> box(-cfg.coeff_box, cfg.coeff_box);
    const auto draw = [&] { return Complex(box(eng), box(eng)); };
    const auto draw_leading = [&] {
        for (int tries = 0; tries < 64; ++tries) {
            const Complex c = draw();
            if (std::abs(c) >= 0.1) return c;
        }
        return Complex(0.1, 0.0);
    };

    std::vector<Complex> h(static_cast<std::size_t>(cfg.deg_h) + 1);
    for (int j = 0; j < cfg.deg_h; ++j) h[static_cast<std::size_t>(j)] = draw();
    h.back() = draw_leading();

    std::vector<Complex> g(static_cast<std::size_t>(cfg.deg_g) + 1);
    for (int j = 0; j < cfg.deg_g; ++j) g[static_cast<std::size_t>(j)] = draw();
    g.back() = draw_leading();

    double alpha = 0.0;
    for (int tries = 0; tries < 64; ++tries) {
        alpha = std::uniform_real_distribution<double>(-2.0, 2.0)(eng);
        if (std::abs(alpha) >= 0.25) break;
    }
    if (std::abs(alpha) < 0.25) alpha = 1.0;

    return TrialDraw{HarmonicFn{AnalyticPoly(std::move(h)),
                                AnalyticPoly(std::move(g))},
                     alpha};
}

struct TrialResult {
    bool completed = false;
    bool violated = false;
    long product_count = 0;
    std::string skip_reason;
};

TrialResult run_trial(const ExperimentConfig& cfg, int trial) {
    TrialResult r;
    try {
        const TrialDraw draw = draw_trial(cfg, trial);
        const ProductZeros pz =
            product_zeros(draw.fn, Alpha(draw.alpha), cfg.tol);
        r.completed = true;
        r.violated = !check_bound(pz.f_report) ||
                     !check_bound(pz.F_report) ||
                     !check_bound(pz.product_report);
        r.product_count = pz.product_report.count_with_multiplicity;
    } catch (const DomainError& e) {
        r.skip_reason = "trial " + std::to_string(trial) + ": " + e.code() +
                        ": " + e.what();
    }
    return r;
}

int resolve_threads(int requested, int trials) {
    int threads = requested;
    if (threads <= 0) {
        if (const char* env = std::getenv("HPK_THREADS")) {
            threads = std::atoi(env);
        }
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        threads = std::clamp(threads, 1, 8);
    }
    return std::clamp(threads, 1, std::max(trials, 1));
}

}  // namespace

HarmonicFn experiment_trial_fn(const ExperimentConfig& cfg, int trial) {
    validate(cfg);
    return draw_trial(cfg, trial).fn;
}

double experiment_trial_alpha(const ExperimentConfig& cfg, int trial) {
    validate(cfg);
    return draw_trial(cfg, trial).alpha;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    const int workers = resolve_threads(threads, cfg.trials);
    std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));

    if (workers == 1) {
        for (int t = 0; t < cfg.trials; ++t) {
            results[static_cast<std::size_t>(t)] = run_trial(cfg, t);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int t = w; t < cfg.trials; t += workers) {
                    results[static_cast<std::size_t>(t)] = run_trial(cfg, t);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    // Aggregation walks trials in index order, so the summary is identical
    // no matter how the work was scheduled.
    ExperimentSummary s;
    double count_sum = 0.0;
    for (const TrialResult& r : results) {
        if (!r.completed) {
            ++s.degenerate_skips;
            s.skip_reasons.push_back(r.skip_reason);
            continue;
        }
        ++s.trials_run;
        if (r.violated) ++s.bound_violations;
        s.max_zero_count = std::max(s.max_zero_count, r.product_count);
        count_sum += static_cast<double>(r.product_count);
    }
    s.mean_zero_count = s.trials_run > 0 ? count_sum / s.trials_run : 0.0;
    s.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return s;
}

}  // namespace hpk
