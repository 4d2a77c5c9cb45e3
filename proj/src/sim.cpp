#include "hypstable/sim.hpp"

#include <algorithm>
#include <cmath>

namespace hypstable {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 path_rng(std::uint64_t seed, std::uint64_t path_index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(path_index + 1)));
}

double sample_subordinator_increment(double dt, double alpha_half,
                                     std::mt19937_64& rng) {
    if (!(alpha_half > 0.0 && alpha_half < 1.0))
        throw std::domain_error(
            "sample_subordinator_increment: index must be in (0, 1)");
    double rho = alpha_half;
    double scale = std::pow(dt, 1.0 / rho);
    if (rho == 0.5) {
        // one-sided stable(1/2) is the inverse-chi-square law 1/(2 Z^2)
        std::normal_distribution<double> normal(0.0, 1.0);
        double z;
        do {
            z = normal(rng);
        } while (z == 0.0);
        return scale / (2.0 * z * z);
    }
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    double u;
    do {
        u = kPi * unif(rng);
    } while (u == 0.0);
    double e = expo(rng);
    double a = std::pow(std::pow(std::sin(rho * u), rho) *
                            std::pow(std::sin((1.0 - rho) * u), 1.0 - rho) /
                            std::sin(u),
                        1.0 / (1.0 - rho));
    return scale * std::pow(a / e, (1.0 - rho) / rho);
}

void simulate_paths(const SimConfig& config,
                    const std::function<void(const PathSample&)>& visit) {
    config.validate();
    const double alpha = config.params.alpha;
    const int d = config.params.dim;
    const int n_steps = int(std::llround(config.t_max / config.dt));
    for (int p = 0; p < config.n_paths; ++p) {
        std::mt19937_64 rng = path_rng(config.seed, std::uint64_t(p));
        std::normal_distribution<double> normal(0.0, 1.0);
        PathSample path;
        path.times.reserve(n_steps + 1);
        path.positions.reserve(n_steps + 1);
        path.radial.reserve(n_steps + 1);
        path.lamperti_clock.reserve(n_steps + 1);
        Eigen::VectorXd z = Eigen::VectorXd::Zero(d);
        z(0) = config.start_norm;
        double clock = 0.0;
        path.times.push_back(0.0);
        path.positions.push_back(z);
        path.radial.push_back(config.start_norm);
        path.lamperti_clock.push_back(0.0);
        for (int s = 1; s <= n_steps; ++s) {
            double r_prev = path.radial.back();
            double ds =
                sample_subordinator_increment(config.dt, alpha / 2.0, rng);
            double sd = std::sqrt(2.0 * ds);
            for (int i = 0; i < d; ++i) z(i) += sd * normal(rng);
            clock += std::pow(r_prev, -alpha) * config.dt;
            path.times.push_back(s * config.dt);
            path.positions.push_back(z);
            path.radial.push_back(z.norm());
            path.lamperti_clock.push_back(clock);
        }
        visit(path);
    }
}

EmpiricalLaw estimate_overshoot(const SimConfig& config, double u) {
    config.validate();
    config.params.require_transient("estimate_overshoot");
    if (!(u > 0.0))
        throw std::domain_error("estimate_overshoot: u must be > 0");
    const double alpha = config.params.alpha;
    const int d = config.params.dim;
    const double level = config.start_norm * std::exp(u);
    const long n_steps = std::llround(config.t_max / config.dt);
    EmpiricalLaw law;
    law.samples.reserve(config.n_paths);
    std::size_t misses = 0;
    std::vector<double> z(d, 0.0);
    for (int p = 0; p < config.n_paths; ++p) {
        std::mt19937_64 rng = path_rng(config.seed, std::uint64_t(p));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::fill(z.begin(), z.end(), 0.0);
        z[0] = config.start_norm;
        bool crossed = false;
        for (long s = 0; s < n_steps; ++s) {
            double ds =
                sample_subordinator_increment(config.dt, alpha / 2.0, rng);
            double sd = std::sqrt(2.0 * ds);
            double r2 = 0.0;
            for (int i = 0; i < d; ++i) {
                z[i] += sd * normal(rng);
                r2 += z[i] * z[i];
            }
            if (r2 >= level * level) {
                law.samples.push_back(0.5 * std::log(r2 / (level * level)));
                crossed = true;
                break;
            }
        }
        if (!crossed) ++misses;
    }
    std::sort(law.samples.begin(), law.samples.end());
    law.count = law.samples.size();
    law.defect = double(misses) / config.n_paths;
    return law;
}

EmpiricalLaw estimate_infimum(const SimConfig& config) {
    config.validate();
    config.params.require_transient("estimate_infimum");
    const double alpha = config.params.alpha;
    const int d = config.params.dim;
    const long n_steps = std::llround(config.t_max / config.dt);
    const long late_cutoff = n_steps - n_steps / 10;
    EmpiricalLaw law;
    law.samples.reserve(config.n_paths);
    long late_count = 0;
    std::vector<double> z(d, 0.0);
    for (int p = 0; p < config.n_paths; ++p) {
        std::mt19937_64 rng = path_rng(config.seed, std::uint64_t(p));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::fill(z.begin(), z.end(), 0.0);
        z[0] = config.start_norm;
        double min_r2 = config.start_norm * config.start_norm;
        long min_step = 0;
        for (long s = 1; s <= n_steps; ++s) {
            double ds =
                sample_subordinator_increment(config.dt, alpha / 2.0, rng);
            double sd = std::sqrt(2.0 * ds);
            double r2 = 0.0;
            for (int i = 0; i < d; ++i) {
                z[i] += sd * normal(rng);
                r2 += z[i] * z[i];
            }
            if (r2 < min_r2) {
                min_r2 = r2;
                min_step = s;
            }
        }
        if (min_step >= late_cutoff) ++late_count;
        law.samples.push_back(
            -0.5 * std::log(min_r2 / (config.start_norm * config.start_norm)));
    }
    std::sort(law.samples.begin(), law.samples.end());
    law.count = law.samples.size();
    law.defect = 0.0;
    law.diagnostic = double(late_count) / config.n_paths;
    return law;
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::vector<double>& cdf_at_samples) {
    if (sorted_samples.size() != cdf_at_samples.size())
        throw std::invalid_argument("ks_statistic: size mismatch");
    if (sorted_samples.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    double n = double(sorted_samples.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        double f = cdf_at_samples[i];
        ks = std::max(ks, std::abs((double(i) + 1.0) / n - f));
        ks = std::max(ks, std::abs(double(i) / n - f));
    }
    return ks;
}

}  // namespace hypstable
