#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hypstable/model.hpp"

namespace hypstable {

/// Monte-Carlo run configuration. Time is the process time of the
/// underlying stable process, not the time-changed clock.
struct SimConfig {
    ProcessParams params;
    int n_paths = 10000;
    double dt = 1e-4;
    double t_max = 10.0;
    std::uint64_t seed = 1;
    double start_norm = 1.0;

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
        if (n_paths < 1)
            throw std::invalid_argument("SimConfig: n_paths must be >= 1");
        if (!(t_max > 0.0))
            throw std::invalid_argument("SimConfig: t_max must be > 0");
        if (!(start_norm > 0.0))
            throw std::invalid_argument("SimConfig: start_norm must be > 0");
    }
};

/// One simulated path of the stable process with its radial projection
/// and the cumulative time-change clock int_0^t R_s^{-alpha} ds.
struct PathSample {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> positions;
    std::vector<double> radial;
    std::vector<double> lamperti_clock;
};

/// Sorted empirical samples of a passage functional; defect is the
/// fraction of paths where the event did not occur before t_max.
struct EmpiricalLaw {
    std::vector<double> samples;  // ascending
    std::size_t count = 0;        // number of contributing paths
    double defect = 0.0;
    double diagnostic = 0.0;  // estimator-specific warning fraction
};

/// One increment of the stable subordinator with Laplace transform
/// E exp(-lambda * sigma_dt) = exp(-dt * lambda^alpha_half);
/// rejection-free exact sampler, with a closed-form fast path at index 1/2.
double sample_subordinator_increment(double dt, double alpha_half,
                                     std::mt19937_64& rng);

/// Deterministic per-path generator: streams for different path indices
/// are decorrelated by a splitmix64 hash of (seed, path_index).
std::mt19937_64 path_rng(std::uint64_t seed, std::uint64_t path_index);

/// Simulates config.n_paths full paths, invoking the visitor once per
/// path. Paths are not retained; callers keep what they need.
void simulate_paths(const SimConfig& config,
                    const std::function<void(const PathSample&)>& visit);

/// Samples of log(R / level_radius) at the first time the radial process
/// exceeds start_norm * e^u (overshoot of the log-radial process over u).
EmpiricalLaw estimate_overshoot(const SimConfig& config, double u);

/// Samples of -log(inf_{t <= t_max} R_t / start_norm); diagnostic is the
/// fraction of paths whose infimum was attained in the last 10% of the
/// horizon (truncation warning).
EmpiricalLaw estimate_infimum(const SimConfig& config);

/// Kolmogorov-Smirnov statistic of sorted samples against a CDF already
/// evaluated at the sample points.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::vector<double>& cdf_at_samples);

}  // namespace hypstable
